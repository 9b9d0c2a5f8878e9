#include "syllogos/set_engine.hpp"

#include <algorithm>
#include <array>

namespace syllogos {

namespace {

// inside / total compared against a rational share without division.
bool share_greater(std::int64_t part, std::int64_t total, const Rational& share) {
  return part * share.denominator() > share.numerator() * total;
}
bool share_at_most(std::int64_t part, std::int64_t total, const Rational& share) {
  return part * share.denominator() <= share.numerator() * total;
}
bool share_at_least(std::int64_t part, std::int64_t total, const Rational& share) {
  return part * share.denominator() >= share.numerator() * total;
}

Truth of(bool b) { return b ? Truth::True : Truth::False; }

}  // namespace

Truth quantifier_truth(const Quantifier& q, std::int64_t inside, std::int64_t outside,
                       const SetSemantics& sem) {
  const std::int64_t total = inside + outside;
  if (is_proportional(q) && total == 0) return Truth::Undefined;

  if (std::holds_alternative<quant::All>(q)) return of(outside == 0);
  if (std::holds_alternative<quant::No>(q)) return of(inside == 0);
  if (std::holds_alternative<quant::Some>(q)) return of(inside > 0);
  if (std::holds_alternative<quant::SomeNot>(q)) return of(outside > 0);
  if (std::holds_alternative<quant::Most>(q)) return of(inside > outside);
  if (std::holds_alternative<quant::Many>(q)) return of(share_greater(inside, total, sem.many_share));
  if (std::holds_alternative<quant::Few>(q)) return of(share_at_most(inside, total, sem.few_share));
  if (std::holds_alternative<quant::AlmostAll>(q))
    return of(share_at_most(outside, total, sem.almost_all_miss));
  if (auto* x = std::get_if<quant::AllBut>(&q)) return of(outside == x->k);
  if (auto* x = std::get_if<quant::Exactly>(&q)) return of(inside == x->k);
  if (auto* x = std::get_if<quant::AtLeast>(&q)) return of(inside >= x->k);
  if (auto* x = std::get_if<quant::Interval>(&q))
    return of(share_at_least(inside, total, x->lo) && share_at_most(inside, total, x->hi));
  // Crisp reading of a fuzzy quantifier: its support.
  const auto& t = std::get<quant::Trapezoid>(q);
  return of(share_at_least(inside, total, t.a) && share_at_most(inside, total, t.b));
}

Truth evaluate_truth(const FiniteModel& model, const Statement& stmt, const SetSemantics& sem) {
  const auto& s = model.extension(stmt.subject());
  const auto& p = model.extension(stmt.predicate());
  std::int64_t inside = 0;
  for (auto atom : s) {
    bool in_p = std::binary_search(p.begin(), p.end(), atom);
    if (in_p != stmt.predicate_negated()) ++inside;
  }
  std::int64_t outside = static_cast<std::int64_t>(s.size()) - inside;
  return quantifier_truth(stmt.quantifier(), inside, outside, sem);
}

bool evaluate_statement(const FiniteModel& model, const Statement& stmt, const SetSemantics& sem) {
  Truth t = evaluate_truth(model, stmt, sem);
  if (t == Truth::Undefined)
    throw UndefinedProportion("'" + render(stmt) + "' has an empty subject; the proportion is 0/0");
  return t == Truth::True;
}

Verdict check_validity(const Syllogism& syl, ImportPolicy policy, int max_universe) {
  ValidityOptions opts;
  opts.policy = policy;
  opts.max_universe = max_universe;
  return check_validity(syl, opts);
}

std::size_t count_valid(const std::vector<MoodEntry>& entries) {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                [](const MoodEntry& e) { return is_valid(e.verdict); }));
}

Syllogism classical_syllogism(Figure figure, std::string_view mood) {
  if (mood.size() != 3) throw InvariantViolation("mood needs three letters");
  auto q = [](char c) -> Quantifier {
    switch (c) {
      case 'A': return quant::All{};
      case 'E': return quant::No{};
      case 'I': return quant::Some{};
      case 'O': return quant::SomeNot{};
    }
    throw InvariantViolation(std::string("unknown mood letter '") + c + "'");
  };
  const Term s("S"), p("P"), m("M");
  auto major = [&](Quantifier qq) {
    bool m_first = figure == Figure::I || figure == Figure::III;
    return m_first ? Statement(qq, m, p) : Statement(qq, p, m);
  };
  auto minor = [&](Quantifier qq) {
    bool s_first = figure == Figure::I || figure == Figure::II;
    return s_first ? Statement(qq, s, m) : Statement(qq, m, s);
  };
  return Syllogism({major(q(mood[0])), minor(q(mood[1]))}, Statement(q(mood[2]), s, p));
}

std::string_view to_string(LsoRelation r) {
  switch (r) {
    case LsoRelation::Contradictory: return "contradictory";
    case LsoRelation::Contrary: return "contrary";
    case LsoRelation::Subcontrary: return "subcontrary";
    case LsoRelation::Subaltern: return "subaltern";
  }
  return "?";
}

LsoTable LsoTable::classical() {
  return LsoTable({
      {"all", "some_not", LsoRelation::Contradictory},
      {"no", "some", LsoRelation::Contradictory},
      {"all", "no", LsoRelation::Contrary},
      {"some", "some_not", LsoRelation::Subcontrary},
      {"all", "some", LsoRelation::Subaltern},
      {"no", "some_not", LsoRelation::Subaltern},
  });
}

LsoTable LsoTable::modern() {
  return LsoTable({
      {"all", "some_not", LsoRelation::Contradictory},
      {"no", "some", LsoRelation::Contradictory},
  });
}

std::optional<LsoRelation> LsoTable::lookup(std::string_view a, std::string_view b) const {
  for (const auto& e : entries_)
    if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) return e.relation;
  return std::nullopt;
}

std::optional<LsoRelation> lso_relation(const Statement& a, const Statement& b, Square square) {
  return lso_relation(a, b, LsoTable::of(square));
}

std::optional<LsoRelation> lso_relation(const Statement& a, const Statement& b,
                                        const LsoTable& table) {
  if (a.subject() != b.subject() || a.predicate() != b.predicate())
    throw TermMismatch("'" + render(a) + "' and '" + render(b) + "' relate different terms");
  if (a.form() != StatementForm::Categorical || b.form() != StatementForm::Categorical)
    return std::nullopt;
  if (!is_classical(a.quantifier()) || !is_classical(b.quantifier())) return std::nullopt;
  return table.lookup(quantifier_tag(a.quantifier()), quantifier_tag(b.quantifier()));
}

}  // namespace syllogos
