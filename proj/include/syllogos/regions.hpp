#pragma once

// Venn-region bookkeeping shared by the set and numeric engines. A model over
// t terms is canonicalized to 2^t region counts; region r holds the atoms
// that belong to term i exactly when bit i of r is set.

#include <cstdint>
#include <span>
#include <vector>

#include "syllogos/core.hpp"

namespace syllogos {

inline constexpr std::size_t kMaxRegionTerms = 8;

using RegionCounts = std::vector<std::int64_t>;

class RegionSpace {
 public:
  explicit RegionSpace(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t region_count() const noexcept { return std::size_t{1} << terms_.size(); }
  /// Bit for `t`; throws InvariantViolation for a term outside the space.
  std::uint32_t bit(const Term& t) const;

  /// Sum of counts over regions inside `mask` (all bits set).
  static std::int64_t cardinality(std::span<const std::int64_t> counts, std::uint32_t mask);

  /// Atoms are numbered region by region in ascending region order.
  FiniteModel materialize(std::span<const std::int64_t> counts) const;

 private:
  std::vector<Term> terms_;
};

/// Visits every vector of `parts` non-negative integers summing to `total`
/// in ascending lexicographic order, writing into buf[offset, offset+parts).
/// Stops early and returns false when `visit` returns false.
template <class Visit>
bool for_each_composition(std::int64_t total, std::size_t parts, RegionCounts& buf,
                          std::size_t offset, Visit&& visit) {
  if (parts == 1) {
    buf[offset] = total;
    return visit(static_cast<const RegionCounts&>(buf));
  }
  for (std::int64_t head = 0; head <= total; ++head) {
    buf[offset] = head;
    if (!for_each_composition(total - head, parts - 1, buf, offset + 1, visit)) return false;
  }
  return true;
}

}  // namespace syllogos
