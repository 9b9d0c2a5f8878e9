#include "syllogos/conditional_engine.hpp"

#include <algorithm>
#include <set>

namespace syllogos {

std::string_view to_string(ProbKind k) {
  switch (k) {
    case ProbKind::Eq1: return "eq1";
    case ProbKind::Eq0: return "eq0";
    case ProbKind::GtZeroWithExistence: return "gt0_exists";
    case ProbKind::LtOneWithExistence: return "lt1_exists";
    case ProbKind::MostBand: return "most_band";
    case ProbKind::FewBand: return "few_band";
  }
  return "?";
}

bool ProbConstraint::admits(const std::optional<Rational>& conditional) const {
  if (!conditional) return !requires_existence;
  const Rational& p = *conditional;
  bool above = lower.inclusive ? p >= lower.value : p > lower.value;
  bool below = upper.inclusive ? p <= upper.value : p < upper.value;
  return above && below;
}

std::string ProbConstraint::render() const {
  const std::string eps = to_string(epsilon);
  switch (kind) {
    case ProbKind::Eq1: return "P(P|S) = 1";
    case ProbKind::Eq0: return "P(P|S) = 0";
    case ProbKind::GtZeroWithExistence: return "P(P|S) > 0 and S is not empty";
    case ProbKind::LtOneWithExistence: return "P(P|S) < 1 and S is not empty";
    case ProbKind::MostBand: return "1 - " + eps + " <= P(P|S) < 1";
    case ProbKind::FewBand: return "0 < P(P|S) <= " + eps;
  }
  return "?";
}

namespace {

void reject_singular(const Statement& s) {
  if (s.form() == StatementForm::Singular || s.subject().is_singleton() ||
      s.predicate().is_singleton())
    throw Unsupported("conditional engine: singular statement '" + render(s) +
                      "' has no probabilistic quantifier");
  if (s.form() == StatementForm::Existence)
    throw Unsupported("conditional engine: existence premise '" + render(s) + "' is not a conditional");
}

}  // namespace

ProbConstraint prob_interpret(const Statement& stmt, const ProbQuantifierConfig& cfg) {
  reject_singular(stmt);
  const Rational& e = cfg.epsilon;
  const auto& q = stmt.quantifier();
  if (stmt.predicate_negated())
    throw Unsupported("conditional engine: negated '" + std::string(quantifier_tag(q)) +
                      "' has no probabilistic reading");
  if (std::holds_alternative<quant::All>(q)) return {ProbKind::Eq1, e, {1, true}, {1, true}, false};
  if (std::holds_alternative<quant::No>(q)) return {ProbKind::Eq0, e, {0, true}, {0, true}, false};
  if (std::holds_alternative<quant::Some>(q))
    return {ProbKind::GtZeroWithExistence, e, {0, false}, {1, true}, true};
  if (std::holds_alternative<quant::SomeNot>(q))
    return {ProbKind::LtOneWithExistence, e, {0, true}, {1, false}, true};
  if (std::holds_alternative<quant::Most>(q))
    return {ProbKind::MostBand, e, {1 - e, true}, {1, false}, false};
  if (std::holds_alternative<quant::Few>(q)) return {ProbKind::FewBand, e, {0, false}, {e, true}, false};
  throw Unsupported("conditional engine: quantifier '" + std::string(quantifier_tag(q)) +
                    "' has no probabilistic reading");
}

Informativeness::Informativeness(std::vector<std::string> most_to_least)
    : order_(std::move(most_to_least)) {
  std::set<std::string> seen(order_.begin(), order_.end());
  if (seen.size() != order_.size()) throw InvariantViolation("informativeness order repeats a tag");
  if (order_.empty()) throw InvariantViolation("informativeness order is empty");
}

Informativeness Informativeness::standard() {
  return Informativeness({"all", "most", "few", "some", "no", "some_not"});
}

std::optional<std::size_t> Informativeness::rank(const Quantifier& q) const {
  auto it = std::find(order_.begin(), order_.end(), quantifier_tag(q));
  if (it == order_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - order_.begin());
}

namespace {

std::string type_name(const Quantifier& q) {
  if (std::holds_alternative<quant::SomeNot>(q)) return "Some...not";
  return render(q);
}

}  // namespace

HeuristicConclusion heuristic_conclude(const Statement& first, const Statement& second,
                                       const Informativeness& order) {
  const Statement* premises[2] = {&first, &second};
  for (const Statement* p : premises) {
    reject_singular(*p);
    if (p->predicate_negated())
      throw Unsupported("conditional engine: negated '" + std::string(quantifier_tag(p->quantifier())) +
                        "' premise is outside the informativeness order");
  }

  std::vector<Term> shared;
  for (const Term& t : {first.subject(), first.predicate()})
    if (t == second.subject() || t == second.predicate()) shared.push_back(t);
  if (shared.size() != 1)
    throw NoSharedMiddle("premises must share exactly one middle term, they share " +
                         std::to_string(shared.size()));
  const Term middle = shared.front();
  auto end_of = [&](const Statement& s) { return s.subject() == middle ? s.predicate() : s.subject(); };

  auto rank = [&](const Statement& s) {
    auto r = order.rank(s.quantifier());
    if (!r)
      throw Unsupported("conditional engine: quantifier '" + std::string(quantifier_tag(s.quantifier())) +
                        "' is not in the informativeness order");
    return *r;
  };
  // Larger rank = less informative. Ties keep the first premise as max.
  const std::size_t min_index = rank(second) >= rank(first) ? 1 : 0;
  const std::size_t max_index = 1 - min_index;
  const Statement& min_p = *premises[min_index];
  const Statement& max_p = *premises[max_index];

  std::optional<Term> subject;
  std::string source;
  if (min_p.subject() != middle) {
    subject = min_p.subject();
    source = "the subject of the min-premise";
  } else if (max_p.subject() != middle) {
    subject = max_p.subject();
    source = "the subject of the max-premise";
  } else {
    subject = end_of(min_p);
    source = "the end term of the min-premise";
  }
  const Term predicate = *subject == end_of(min_p) ? end_of(max_p) : end_of(min_p);

  Statement conclusion(min_p.quantifier(), *subject, predicate, false);
  std::vector<std::string> trace{
      "min-heuristic: '" + render(min_p) + "' is the least informative premise, so the conclusion is " +
          type_name(min_p.quantifier()) + "-type",
      "attachment-heuristic: '" + subject->display() + "' is " + source +
          ", so it becomes the conclusion subject",
  };
  return {std::move(conclusion), std::move(trace), max_index, min_index};
}

}  // namespace syllogos
