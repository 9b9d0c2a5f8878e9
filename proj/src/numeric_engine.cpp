#include "syllogos/numeric_engine.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>

namespace syllogos {

std::optional<quant::Interval> frechet_bounds(std::span<const ProportionConstraint> premises,
                                              const ProportionGoal& goal) {
  if (premises.size() != 2) return std::nullopt;
  const auto& a = premises[0];
  const auto& b = premises[1];
  if (a.numerator.size() != 1 || b.numerator.size() != 1) return std::nullopt;
  if (a.denominator != b.denominator || goal.denominator != a.denominator) return std::nullopt;
  const Literal& la = a.numerator.front();
  const Literal& lb = b.numerator.front();
  if (la.term == lb.term || la.term == a.denominator || lb.term == a.denominator) return std::nullopt;
  if (goal.numerator.size() != 2) return std::nullopt;
  bool same = (goal.numerator[0] == la && goal.numerator[1] == lb) ||
              (goal.numerator[0] == lb && goal.numerator[1] == la);
  if (!same) return std::nullopt;

  Rational lo = std::max(Rational(0), a.bounds.lo + b.bounds.lo - 1);
  Rational hi = std::min(a.bounds.hi, b.bounds.hi);
  return quant::Interval{lo, hi, {}};
}

IntervalConclusion interval_conclude(std::span<const ProportionConstraint> premises,
                                     const ProportionGoal& goal, const IntervalOptions& opts) {
  if (opts.allow_fast_path) {
    if (auto closed = frechet_bounds(premises, goal)) {
      IntervalConclusion out;
      out.lo = closed->lo;
      out.hi = closed->hi;
      out.method = IntervalConclusion::Method::Frechet;
      return out;
    }
  }
  return interval_conclude_exhaustive(premises, goal, opts.max_total);
}

AlphaCut alpha_cut(const quant::Trapezoid& t, const Rational& alpha) {
  if (!(alpha > 0 && alpha <= 1)) throw InvariantViolation("alpha must lie in (0,1]");
  return {alpha, t.a + alpha * (t.c - t.a), t.b - alpha * (t.b - t.d)};
}

quant::Trapezoid FuzzyConclusion::approximate_trapezoid() const {
  if (cuts.empty()) throw InvariantViolation("no alpha-cuts to approximate");
  const auto& low = cuts.front();
  const auto& high = cuts.back();
  return quant::Trapezoid{low.lo, high.lo, high.hi, low.hi, {}};
}

FuzzyConclusion fuzzy_conclude_qep(std::span<const quant::Trapezoid> premises, FuzzySchema schema,
                                   std::span<const Rational> alpha_levels) {
  if (premises.empty()) throw InvariantViolation("fuzzy conclusion needs at least one premise");
  if (alpha_levels.empty()) throw InvariantViolation("no alpha levels given");
  for (std::size_t i = 0; i < alpha_levels.size(); ++i) {
    if (!(alpha_levels[i] > 0 && alpha_levels[i] <= 1))
      throw InvariantViolation("alpha levels must lie in (0,1]");
    if (i > 0 && !(alpha_levels[i - 1] < alpha_levels[i]))
      throw InvariantViolation("alpha levels must be strictly ascending");
  }
  for (const auto& t : premises) validate(t);

  FuzzyConclusion out;
  for (const auto& alpha : alpha_levels) {
    AlphaCut acc{alpha, 1, 1};
    for (const auto& t : premises) {
      AlphaCut c = alpha_cut(t, alpha);
      switch (schema) {
        case FuzzySchema::IntersectionProduct:
          acc.lo *= c.lo;
          acc.hi *= c.hi;
          break;
      }
    }
    out.cuts.push_back(acc);
  }
  return out;
}

std::optional<IntersectionProductSlots> match_intersection_product(const Statement& first,
                                                                   const Statement& second) {
  if (first.form() != StatementForm::Categorical || second.form() != StatementForm::Categorical)
    return std::nullopt;
  if (first.predicate_negated() || second.predicate_negated()) return std::nullopt;
  const std::string& a = first.subject().key();
  const std::string& b = first.predicate().key();
  const std::string& compound = second.subject().key();
  for (const auto& candidate : {b + " " + a, a + " " + b, b + " and " + a, a + " and " + b})
    if (compound == candidate) {
      if (second.predicate() == first.subject() || second.predicate() == first.predicate())
        return std::nullopt;
      return IntersectionProductSlots{first.subject(), first.predicate(), second.predicate()};
    }
  return std::nullopt;
}

namespace {

std::int64_t exception_size(const Statement& s, const char* role) {
  if (s.form() != StatementForm::Categorical || s.predicate_negated())
    throw StructureError(std::string(role) + " premise must be an affirmative 'all but' statement");
  if (std::holds_alternative<quant::All>(s.quantifier())) return 0;
  if (auto* x = std::get_if<quant::AllBut>(&s.quantifier())) return x->k;
  throw StructureError(std::string(role) + " premise must use 'all but k' (or 'all'), got '" +
                       render(s) + "'");
}

// Regions over (S, M, P): bit 0 = S, bit 1 = M, bit 2 = P.
struct RegionEquality {
  std::vector<std::size_t> regions;
  std::int64_t value;
};

std::vector<std::size_t> regions_where(const std::function<bool(bool, bool, bool)>& pred) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < 8; ++r)
    if (pred(r & 1, r & 2, r & 4)) out.push_back(r);
  return out;
}

// Exact min/max of sum(objective) over non-negative integer region counts
// meeting every equality. Each region in the search is bounded by the
// constraints that mention it; a region's count is forced once it is the
// last open region of some constraint.
class EqualitySearch {
 public:
  EqualitySearch(std::vector<RegionEquality> eqs, std::vector<std::size_t> objective)
      : eqs_(std::move(eqs)), objective_(std::move(objective)) {
    for (const auto& e : eqs_)
      for (auto r : e.regions)
        if (std::find(order_.begin(), order_.end(), r) == order_.end()) order_.push_back(r);
    std::sort(order_.begin(), order_.end());
    for (auto r : objective_)
      if (std::find(order_.begin(), order_.end(), r) == order_.end())
        throw Unsupported("exception size is unbounded under these premises");
  }

  std::optional<std::pair<std::int64_t, std::int64_t>> run() {
    counts_.fill(0);
    assigned_.fill(false);
    recurse(0);
    return best_;
  }

 private:
  std::int64_t partial(const RegionEquality& e) const {
    std::int64_t s = 0;
    for (auto r : e.regions) s += assigned_[r] ? counts_[r] : 0;
    return s;
  }

  void recurse(std::size_t depth) {
    if (depth == order_.size()) {
      for (const auto& e : eqs_)
        if (partial(e) != e.value) return;
      std::int64_t obj = 0;
      for (auto r : objective_) obj += counts_[r];
      if (!best_) best_ = {obj, obj};
      best_->first = std::min(best_->first, obj);
      best_->second = std::max(best_->second, obj);
      return;
    }
    const std::size_t r = order_[depth];
    std::int64_t lo = 0, hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : eqs_) {
      if (std::find(e.regions.begin(), e.regions.end(), r) == e.regions.end()) continue;
      std::int64_t room = e.value - partial(e);
      if (room < 0) return;
      hi = std::min(hi, room);
      std::size_t open = 0;
      for (auto q : e.regions) open += assigned_[q] ? 0 : 1;
      if (open == 1) lo = std::max(lo, room), hi = std::min(hi, room);
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      counts_[r] = v;
      assigned_[r] = true;
      recurse(depth + 1);
      assigned_[r] = false;
    }
    counts_[r] = 0;
  }

  std::vector<RegionEquality> eqs_;
  std::vector<std::size_t> objective_;
  std::vector<std::size_t> order_;
  std::array<std::int64_t, 8> counts_{};
  std::array<bool, 8> assigned_{};
  std::optional<std::pair<std::int64_t, std::int64_t>> best_;
};

}  // namespace

ExceptiveConclusion exceptive_conclude(const Statement& major, const Statement& minor,
                                       const std::optional<Cardinality>& card, ExceptiveMode mode) {
  const std::int64_t x1 = exception_size(major, "major");
  const std::int64_t x2 = exception_size(minor, "minor");
  const Term& m = major.subject();
  const Term& p = major.predicate();
  const Term& s = minor.subject();
  if (minor.predicate() != m || s == p)
    throw StructureError("expected 'all but x1 M are P' and 'all but x2 S are M'");
  if (!card)
    throw CardinalityRequired("an exceptive conclusion needs an assumed cardinality (e.g. --card " +
                              m.display() + "=100)");
  if (card->term != s && card->term != m && card->term != p)
    throw InvariantViolation("cardinality term '" + card->term.display() + "' is not in the syllogism");
  if (card->size < 0) throw InvariantViolation("cardinality must be non-negative");

  ExceptiveConclusion out{mode, s, p, 0, 0};
  if (mode == ExceptiveMode::Literal) {
    if (card->size < std::max(x1, x2))
      throw InvariantViolation("assumed cardinality " + std::to_string(card->size) +
                               " is smaller than an exception size");
    out.lo = out.hi = card->size - x2;
    return out;
  }

  auto in_card = [&](bool in_s, bool in_m, bool in_p) {
    return card->term == s ? in_s : card->term == m ? in_m : in_p;
  };
  std::vector<RegionEquality> eqs{
      {regions_where([](bool, bool in_m, bool in_p) { return in_m && !in_p; }), x1},
      {regions_where([](bool in_s, bool in_m, bool) { return in_s && !in_m; }), x2},
      {regions_where(in_card), card->size},
  };
  auto objective = regions_where([](bool in_s, bool, bool in_p) { return in_s && !in_p; });
  auto range = EqualitySearch(std::move(eqs), std::move(objective)).run();
  if (!range) throw Inconsistent("no model satisfies the exceptive premises with the assumed cardinality");
  out.lo = range->first;
  out.hi = range->second;
  return out;
}

std::string ExceptiveConclusion::render() const {
  std::string count = lo == hi ? std::to_string(lo)
                               : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  return "All but " + count + " " + subject.display() + " are " + predicate.display();
}

}  // namespace syllogos
