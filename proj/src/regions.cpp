#include "syllogos/regions.hpp"

#include <algorithm>
#include <map>

namespace syllogos {

RegionSpace::RegionSpace(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.size() > kMaxRegionTerms)
    throw Unsupported("at most " + std::to_string(kMaxRegionTerms) + " distinct terms are supported, got " +
                      std::to_string(terms_.size()));
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (terms_[i] == terms_[j]) throw InvariantViolation("duplicate term '" + terms_[i].display() + "'");
}

std::uint32_t RegionSpace::bit(const Term& t) const {
  auto it = std::find(terms_.begin(), terms_.end(), t);
  if (it == terms_.end()) throw InvariantViolation("term '" + t.display() + "' is not in the region space");
  return std::uint32_t{1} << static_cast<std::uint32_t>(it - terms_.begin());
}

std::int64_t RegionSpace::cardinality(std::span<const std::int64_t> counts, std::uint32_t mask) {
  std::int64_t sum = 0;
  for (std::size_t r = 0; r < counts.size(); ++r)
    if ((r & mask) == mask) sum += counts[r];
  return sum;
}

FiniteModel RegionSpace::materialize(std::span<const std::int64_t> counts) const {
  std::map<Term, std::vector<std::size_t>> ext;
  for (const auto& t : terms_) ext.emplace(t, std::vector<std::size_t>{});
  std::size_t atom = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    for (std::int64_t k = 0; k < counts[r]; ++k, ++atom)
      for (std::size_t i = 0; i < terms_.size(); ++i)
        if (r & (std::size_t{1} << i)) ext.at(terms_[i]).push_back(atom);
  }
  return FiniteModel(atom, std::move(ext));
}

}  // namespace syllogos
