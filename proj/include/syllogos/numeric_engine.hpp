#pragma once

// Quantity-computing set-based engines: interval propagation over Venn
// region counts, fuzzy alpha-cut products, and exception-size arithmetic.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syllogos/core.hpp"
#include "syllogos/regions.hpp"

namespace syllogos {

struct Literal {
  Term term;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// |denominator ∩ numerator| / |denominator| lies in bounds, the numerator
/// being a conjunction of literals.
struct ProportionConstraint {
  std::vector<Literal> numerator;
  Term denominator;
  quant::Interval bounds;
};

struct ProportionGoal {
  std::vector<Literal> numerator;
  Term denominator;
};

/// Counts over the 2^t Venn regions of `terms` (bit i = terms[i]).
struct RegionVector {
  std::vector<Term> terms;
  RegionCounts counts;
  friend bool operator==(const RegionVector&, const RegionVector&) = default;
};

struct IntervalConclusion {
  enum class Method { Frechet, Exhaustive };

  Rational lo;
  Rational hi;
  Method method = Method::Exhaustive;
  std::optional<RegionVector> witness_min;
  std::optional<RegionVector> witness_max;
};

struct IntervalOptions {
  std::int64_t max_total = 40;
  bool allow_fast_path = true;
};

/// Closed form [max(0, lo1 + lo2 - 1), min(hi1, hi2)] for two single-literal
/// premises over one shared denominator and the conjunction goal. nullopt
/// when the premises do not have that shape.
std::optional<quant::Interval> frechet_bounds(std::span<const ProportionConstraint> premises,
                                              const ProportionGoal& goal);

/// Uses the closed form when it applies (and is allowed), otherwise the
/// exhaustive search.
IntervalConclusion interval_conclude(std::span<const ProportionConstraint> premises,
                                     const ProportionGoal& goal, const IntervalOptions& opts = {});

/// Min and max of the goal proportion over every region vector with total in
/// [1, max_total] that satisfies all premises. Regions outside every
/// denominator are pinned to zero; they cannot affect any proportion.
/// Witnesses are the first extremal vectors in lexicographic order.
/// Throws Inconsistent when no vector satisfies the premises and
/// EmptyDenominator when all satisfying vectors empty the goal denominator.
IntervalConclusion interval_conclude_exhaustive(std::span<const ProportionConstraint> premises,
                                                const ProportionGoal& goal, std::int64_t max_total);

namespace serial {
IntervalConclusion interval_conclude_exhaustive(std::span<const ProportionConstraint> premises,
                                                const ProportionGoal& goal, std::int64_t max_total);
}

struct AlphaCut {
  Rational alpha;
  Rational lo;
  Rational hi;
  friend bool operator==(const AlphaCut&, const AlphaCut&) = default;
};

AlphaCut alpha_cut(const quant::Trapezoid& t, const Rational& alpha);

enum class FuzzySchema { IntersectionProduct };

struct FuzzyConclusion {
  std::vector<AlphaCut> cuts;  // ascending alpha

  /// Support from the lowest cut, kernel from the highest.
  quant::Trapezoid approximate_trapezoid() const;
};

/// Combines the premises' alpha-cuts per level. IntersectionProduct
/// multiplies interval endpoints (all values are non-negative).
/// alpha_levels must be strictly ascending within (0, 1].
FuzzyConclusion fuzzy_conclude_qep(std::span<const quant::Trapezoid> premises, FuzzySchema schema,
                                   std::span<const Rational> alpha_levels);

/// "Q1 A are B; Q2 <B A> are C" -> A are "B and C". The compound subject
/// may be written "B A", "A B", "B and A" or "A and B".
struct IntersectionProductSlots {
  Term subject;
  Term first;
  Term second;
};
std::optional<IntersectionProductSlots> match_intersection_product(const Statement& first,
                                                                   const Statement& second);

/// Exception-size conclusions for "all but x1 M are P; all but x2 S are M".
/// Literal applies the worked-table subtraction card - x2; SoundBound is the
/// exact range of |S − P| over every model of the premises and the
/// cardinality assumption.
enum class ExceptiveMode { Literal, SoundBound };

struct Cardinality {
  Term term;
  std::int64_t size = 0;
};

struct ExceptiveConclusion {
  ExceptiveMode mode;
  Term subject;
  Term predicate;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::string render() const;
};

/// `major` is All but x1 M are P, `minor` is All but x2 S are M ("All"
/// counts as all but 0). Throws CardinalityRequired without `card`,
/// StructureError for any other term layout, Inconsistent when no model fits.
ExceptiveConclusion exceptive_conclude(const Statement& major, const Statement& minor,
                                       const std::optional<Cardinality>& card, ExceptiveMode mode);

}  // namespace syllogos
