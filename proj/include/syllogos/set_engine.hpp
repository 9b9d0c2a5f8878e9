#pragma once

// Set-based interpretation: terms denote finite sets, quantifiers are
// relations between the subject and predicate extensions.

#include <optional>
#include <string>
#include <vector>

#include "syllogos/core.hpp"
#include "syllogos/regions.hpp"

namespace syllogos {

/// Thresholds for the intermediate quantifiers. These are interpretive
/// defaults: few = at most 1/5 of the subject, almost all = at most 1/20
/// outside, many = more than 1/2 (the same as most).
struct SetSemantics {
  Rational few_share{1, 5};
  Rational almost_all_miss{1, 20};
  Rational many_share{1, 2};
};

enum class Truth { False, True, Undefined };

/// Truth of `q` given |s ∩ p| (inside) and |s − p| (outside), where p is
/// already complemented for a negated predicate. Undefined marks a
/// proportional quantifier over an empty subject.
Truth quantifier_truth(const Quantifier& q, std::int64_t inside, std::int64_t outside,
                       const SetSemantics& sem = {});

/// Throws UndefinedProportion instead of returning Undefined.
bool evaluate_statement(const FiniteModel& model, const Statement& stmt,
                        const SetSemantics& sem = {});
Truth evaluate_truth(const FiniteModel& model, const Statement& stmt, const SetSemantics& sem = {});

struct ValidityOptions {
  ImportPolicy policy = ImportPolicy::NoImport;
  ImportScope scope = ImportScope::SubjectsOnly;
  int max_universe = 6;
  SetSemantics semantics;
};

/// Exhaustive search over region-count vectors of total 0..max_universe in
/// lexicographic order (size first). Singular statements are desugared and
/// singleton terms are held to exactly one atom. A premise that evaluates to
/// Undefined counts as unsatisfied. Partitioned across OpenMP threads by the
/// first region count; the result equals serial::check_validity.
Verdict check_validity(const Syllogism& syl, const ValidityOptions& opts);
Verdict check_validity(const Syllogism& syl, ImportPolicy policy, int max_universe);

namespace serial {
Verdict check_validity(const Syllogism& syl, const ValidityOptions& opts);
}

struct MoodEntry {
  Figure figure;
  std::string mood;  // e.g. "AAA"
  Syllogism syllogism;
  Verdict verdict;
};

/// All 4 figures x 64 moods over terms S, P, M. Figure-major, then mood in
/// AEIO lexicographic order. Parallel over the 256 cases.
std::vector<MoodEntry> enumerate_classical_moods(const ValidityOptions& opts);
std::size_t count_valid(const std::vector<MoodEntry>& entries);

namespace serial {
std::vector<MoodEntry> enumerate_classical_moods(const ValidityOptions& opts);
}

Syllogism classical_syllogism(Figure figure, std::string_view mood);

enum class LsoRelation { Contradictory, Contrary, Subcontrary, Subaltern };
enum class Square { Classical, Modern };

std::string_view to_string(LsoRelation r);

/// Relation table over the classical quantifier tags. Symmetric lookup.
class LsoTable {
 public:
  struct Entry {
    std::string first;
    std::string second;
    LsoRelation relation;
  };

  explicit LsoTable(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  static LsoTable classical();
  /// Without existential import only the contradictories survive.
  static LsoTable modern();
  static LsoTable of(Square sq) { return sq == Square::Classical ? classical() : modern(); }

  std::optional<LsoRelation> lookup(std::string_view a, std::string_view b) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// TermMismatch if the statements do not share subject and predicate.
/// Non-classical quantifiers yield nullopt.
std::optional<LsoRelation> lso_relation(const Statement& a, const Statement& b, Square square);
std::optional<LsoRelation> lso_relation(const Statement& a, const Statement& b,
                                        const LsoTable& table);

}  // namespace syllogos
