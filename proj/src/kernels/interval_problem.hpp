#pragma once

// Interval propagation compiled to region masks, plus the min/max
// accumulator shared by the serial and OpenMP scans.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "syllogos/numeric_engine.hpp"

namespace syllogos::detail {

struct CompiledProportion {
  std::uint32_t denominator = 0;
  std::uint32_t must_set = 0;
  std::uint32_t must_clear = 0;
  Rational lo{0}, hi{1};
};

/// A proportion num/den kept unreduced; comparisons cross-multiply.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
};

class IntervalProblem {
 public:
  IntervalProblem(std::span<const ProportionConstraint> premises, const ProportionGoal& goal)
      : space_(collect_terms(premises, goal)) {
    for (const auto& p : premises) premises_.push_back(compile(p.numerator, p.denominator, p.bounds));
    goal_ = compile(goal.numerator, goal.denominator, quant::Interval{});
    std::uint32_t dens = goal_.denominator;
    for (const auto& p : premises_) dens |= p.denominator;
    for (std::uint32_t r = 0; r < space_.region_count(); ++r)
      if (r & dens) relevant_.push_back(r);
  }

  const RegionSpace& space() const noexcept { return space_; }
  /// Relevant regions plus one slack slot.
  std::size_t slots() const noexcept { return relevant_.size() + 1; }
  std::size_t relevant_count() const noexcept { return relevant_.size(); }

  bool premises_hold(std::span<const std::int64_t> c) const {
    for (const auto& p : premises_) {
      auto f = proportion(p, c);
      if (f.den == 0) return false;
      if (f.num * p.lo.denominator() < p.lo.numerator() * f.den) return false;
      if (f.num * p.hi.denominator() > p.hi.numerator() * f.den) return false;
    }
    return true;
  }

  Fraction goal_value(std::span<const std::int64_t> c) const { return proportion(goal_, c); }

  RegionVector expand(std::span<const std::int64_t> c) const {
    RegionVector v{space_.terms(), RegionCounts(space_.region_count(), 0)};
    for (std::size_t i = 0; i < relevant_.size(); ++i) v.counts[relevant_[i]] = c[i];
    return v;
  }

 private:
  static std::vector<Term> collect_terms(std::span<const ProportionConstraint> premises,
                                         const ProportionGoal& goal) {
    std::vector<Term> out;
    auto add = [&](const Term& t) {
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    for (const auto& p : premises) {
      add(p.denominator);
      for (const auto& l : p.numerator) add(l.term);
    }
    add(goal.denominator);
    for (const auto& l : goal.numerator) add(l.term);
    return out;
  }

  CompiledProportion compile(const std::vector<Literal>& num, const Term& den,
                             const quant::Interval& bounds) const {
    CompiledProportion c;
    c.denominator = space_.bit(den);
    for (const auto& l : num) (l.negated ? c.must_clear : c.must_set) |= space_.bit(l.term);
    c.lo = bounds.lo;
    c.hi = bounds.hi;
    return c;
  }

  Fraction proportion(const CompiledProportion& p, std::span<const std::int64_t> c) const {
    Fraction f{0, 0};
    for (std::size_t i = 0; i < relevant_.size(); ++i) {
      std::uint32_t r = relevant_[i];
      if (!(r & p.denominator)) continue;
      f.den += c[i];
      if ((r & p.must_set) == p.must_set && !(r & p.must_clear)) f.num += c[i];
    }
    return f;
  }

  RegionSpace space_;
  std::vector<CompiledProportion> premises_;
  CompiledProportion goal_;
  std::vector<std::uint32_t> relevant_;
};

/// Running extremes over a scan; only strict improvements replace a witness,
/// so merging partitions in ascending order keeps the serial witnesses.
struct ExtremeScan {
  bool any_satisfying = false;
  std::optional<Fraction> min, max;
  RegionCounts min_at, max_at;

  void visit(const IntervalProblem& problem, const RegionCounts& c) {
    if (!problem.premises_hold(c)) return;
    any_satisfying = true;
    Fraction f = problem.goal_value(c);
    if (f.den == 0) return;
    offer(f, c, f, c);
  }

  void merge(const ExtremeScan& other) {
    any_satisfying = any_satisfying || other.any_satisfying;
    if (other.min) offer(*other.min, other.min_at, *other.max, other.max_at);
  }

 private:
  void offer(const Fraction& lo, const RegionCounts& lo_at, const Fraction& hi,
             const RegionCounts& hi_at) {
    if (!min || lo < *min) min = lo, min_at = lo_at;
    if (!max || *max < hi) max = hi, max_at = hi_at;
  }
};

inline IntervalConclusion finish(const IntervalProblem& problem, const ExtremeScan& scan) {
  if (!scan.any_satisfying) throw Inconsistent("no region vector satisfies the premises");
  if (!scan.min) throw EmptyDenominator("every model of the premises empties the goal denominator");
  IntervalConclusion out;
  out.lo = Rational(scan.min->num, scan.min->den);
  out.hi = Rational(scan.max->num, scan.max->den);
  out.method = IntervalConclusion::Method::Exhaustive;
  out.witness_min = problem.expand(scan.min_at);
  out.witness_max = problem.expand(scan.max_at);
  return out;
}

}  // namespace syllogos::detail
