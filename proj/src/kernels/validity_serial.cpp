// Reference kernel: one thread, canonical order. The OpenMP kernels are
// tested against this.

#include <optional>

#include "kernels/validity_problem.hpp"

namespace syllogos::serial {

Verdict check_validity(const Syllogism& syl, const ValidityOptions& opts) {
  if (opts.max_universe < 1) throw InvariantViolation("max_universe must be at least 1");
  const detail::ValidityProblem problem(syl, opts);

  RegionCounts buf(problem.regions(), 0);
  std::optional<RegionCounts> counter;
  bool saw_undefined = false;
  for (std::int64_t n = 0; n <= opts.max_universe && !counter; ++n) {
    for_each_composition(n, problem.regions(), buf, 0, [&](const RegionCounts& counts) {
      switch (problem.classify(counts)) {
        case detail::Outcome::ConclusionFails:
          counter = counts;
          return false;
        case detail::Outcome::ConclusionUndefined:
          saw_undefined = true;
          break;
        default:
          break;
      }
      return true;
    });
  }
  return detail::make_verdict(problem, opts.max_universe, counter ? &*counter : nullptr,
                              saw_undefined);
}

std::vector<MoodEntry> enumerate_classical_moods(const ValidityOptions& opts) {
  static constexpr char kLetters[] = {'A', 'E', 'I', 'O'};
  std::vector<MoodEntry> out;
  for (Figure f : {Figure::I, Figure::II, Figure::III, Figure::IV})
    for (char a : kLetters)
      for (char b : kLetters)
        for (char c : kLetters) {
          std::string mood{a, b, c};
          Syllogism syl = classical_syllogism(f, mood);
          Verdict v = serial::check_validity(syl, opts);
          out.push_back({f, mood, std::move(syl), std::move(v)});
        }
  return out;
}

}  // namespace syllogos::serial
