// OpenMP interval scan, partitioned by the count in the first relevant
// region. Partitions are merged in ascending order so witnesses match the
// serial scan.

#include "kernels/interval_problem.hpp"

namespace syllogos {

IntervalConclusion interval_conclude_exhaustive(std::span<const ProportionConstraint> premises,
                                                const ProportionGoal& goal, std::int64_t max_total) {
  if (max_total < 1) throw InvariantViolation("max_total must be at least 1");
  const detail::IntervalProblem problem(premises, goal);
  const std::size_t slots = problem.slots();
  const std::size_t slack = slots - 1;

  std::vector<detail::ExtremeScan> parts(static_cast<std::size_t>(max_total) + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t head = 0; head <= max_total; ++head) {
    auto& scan = parts[static_cast<std::size_t>(head)];
    RegionCounts buf(slots, 0);
    buf[0] = head;
    for_each_composition(max_total - head, slots - 1, buf, 1, [&](const RegionCounts& c) {
      if (c[slack] != max_total) scan.visit(problem, c);
      return true;
    });
  }

  detail::ExtremeScan merged;
  for (const auto& p : parts) merged.merge(p);
  return detail::finish(problem, merged);
}

}  // namespace syllogos
