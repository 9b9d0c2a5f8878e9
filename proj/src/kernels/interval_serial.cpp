// Reference interval scan: one thread, lexicographic order.

#include "kernels/interval_problem.hpp"

namespace syllogos::serial {

IntervalConclusion interval_conclude_exhaustive(std::span<const ProportionConstraint> premises,
                                                const ProportionGoal& goal, std::int64_t max_total) {
  if (max_total < 1) throw InvariantViolation("max_total must be at least 1");
  const detail::IntervalProblem problem(premises, goal);
  const std::size_t slack = problem.slots() - 1;

  detail::ExtremeScan scan;
  RegionCounts buf(problem.slots(), 0);
  for_each_composition(max_total, problem.slots(), buf, 0, [&](const RegionCounts& c) {
    if (c[slack] != max_total) scan.visit(problem, c);
    return true;
  });
  return detail::finish(problem, scan);
}

}  // namespace syllogos::serial
