// OpenMP validity kernels. Models of each universe size are split by the
// count in region 0; partitions are independent and the lowest partition
// holding a countermodel wins, which reproduces the serial order exactly.

#include <atomic>
#include <limits>
#include <optional>

#include "kernels/validity_problem.hpp"

namespace syllogos {

namespace {

struct Partition {
  std::optional<RegionCounts> counter;
  bool saw_undefined = false;
};

void lower_to(std::atomic<std::int64_t>& target, std::int64_t value) {
  std::int64_t cur = target.load(std::memory_order_relaxed);
  while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

Verdict check_validity(const Syllogism& syl, const ValidityOptions& opts) {
  if (opts.max_universe < 1) throw InvariantViolation("max_universe must be at least 1");
  const detail::ValidityProblem problem(syl, opts);
  const std::size_t regions = problem.regions();

  bool saw_undefined = false;
  for (std::int64_t n = 0; n <= opts.max_universe; ++n) {
    std::vector<Partition> parts(static_cast<std::size_t>(n) + 1);
    std::atomic<std::int64_t> first_hit{std::numeric_limits<std::int64_t>::max()};

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t head = 0; head <= n; ++head) {
      if (head > first_hit.load(std::memory_order_relaxed)) continue;
      Partition& part = parts[static_cast<std::size_t>(head)];
      RegionCounts buf(regions, 0);
      buf[0] = head;
      for_each_composition(n - head, regions - 1, buf, 1, [&](const RegionCounts& counts) {
        switch (problem.classify(counts)) {
          case detail::Outcome::ConclusionFails:
            part.counter = counts;
            return false;
          case detail::Outcome::ConclusionUndefined:
            part.saw_undefined = true;
            break;
          default:
            break;
        }
        return true;
      });
      if (part.counter) lower_to(first_hit, head);
    }

    for (const auto& part : parts) {
      if (part.counter) return detail::make_verdict(problem, opts.max_universe, &*part.counter, false);
      saw_undefined = saw_undefined || part.saw_undefined;
    }
  }
  return detail::make_verdict(problem, opts.max_universe, nullptr, saw_undefined);
}

std::vector<MoodEntry> enumerate_classical_moods(const ValidityOptions& opts) {
  static constexpr char kLetters[] = {'A', 'E', 'I', 'O'};
  std::vector<std::pair<Figure, std::string>> cases;
  for (Figure f : {Figure::I, Figure::II, Figure::III, Figure::IV})
    for (char a : kLetters)
      for (char b : kLetters)
        for (char c : kLetters) cases.emplace_back(f, std::string{a, b, c});

  std::vector<std::optional<MoodEntry>> slots(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    Syllogism syl = classical_syllogism(cases[i].first, cases[i].second);
    Verdict v = serial::check_validity(syl, opts);
    slots[i].emplace(MoodEntry{cases[i].first, cases[i].second, std::move(syl), std::move(v)});
  }

  std::vector<MoodEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace syllogos
