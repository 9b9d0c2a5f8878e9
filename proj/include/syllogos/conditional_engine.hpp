#pragma once

// Conditional interpretation: "Q S are P" constrains the conditional
// probability P(P|S); conclusions come from the min- and attachment
// heuristics rather than from a validity check.

#include <optional>
#include <string>
#include <vector>

#include "syllogos/core.hpp"

namespace syllogos {

enum class ProbKind { Eq1, Eq0, GtZeroWithExistence, LtOneWithExistence, MostBand, FewBand };

std::string_view to_string(ProbKind k);

struct ProbBound {
  Rational value;
  bool inclusive = true;
  friend bool operator==(const ProbBound&, const ProbBound&) = default;
};

struct ProbConstraint {
  ProbKind kind;
  Rational epsilon;
  ProbBound lower;
  ProbBound upper;
  bool requires_existence = false;

  /// `conditional` is P(P|S), nullopt when S is empty. With an empty S only
  /// the existence-free constraints hold (vacuously).
  bool admits(const std::optional<Rational>& conditional) const;
  /// e.g. "1 - 1/10 <= P(P|S) < 1".
  std::string render() const;
};

/// All, No, Some, Some...not, Most and Few only; Unsupported otherwise,
/// including singular statements and negated intermediate forms.
ProbConstraint prob_interpret(const Statement& stmt, const ProbQuantifierConfig& cfg = {});

/// Strict total order over quantifier tags, most informative first.
class Informativeness {
 public:
  explicit Informativeness(std::vector<std::string> most_to_least);
  /// all > most > few > some > no > some_not
  static Informativeness standard();

  /// 0 is the most informative; nullopt for tags outside the order.
  std::optional<std::size_t> rank(const Quantifier& q) const;
  const std::vector<std::string>& order() const noexcept { return order_; }

 private:
  std::vector<std::string> order_;
};

struct HeuristicConclusion {
  Statement conclusion;
  /// Two lines: "min-heuristic: ..." then "attachment-heuristic: ...".
  std::vector<std::string> trace;
  std::size_t max_premise = 0;  // index into the premise pair
  std::size_t min_premise = 1;
};

/// Conclusion quantifier = quantifier of the less informative premise (ties
/// make the first premise the max-premise). Conclusion subject = the
/// min-premise subject if it is an end term, else the max-premise subject if
/// it is, else the min-premise end term; the predicate is the other end term.
/// Throws NoSharedMiddle for a bad term layout, Unsupported for quantifiers
/// outside `order` or singular premises.
HeuristicConclusion heuristic_conclude(const Statement& first, const Statement& second,
                                       const Informativeness& order = Informativeness::standard());

}  // namespace syllogos
