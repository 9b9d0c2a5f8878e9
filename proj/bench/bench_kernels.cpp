// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "syllogos/numeric_engine.hpp"
#include "syllogos/parser.hpp"
#include "syllogos/set_engine.hpp"

using namespace syllogos;

namespace {

const Syllogism& sorites() {
  static const Syllogism syl = parse_syllogism_file(
      "All A are B\nAll B are C\nAll C are D\nAll D are E\n---\nAll A are E\n");
  return syl;
}

ValidityOptions sorites_options(int bound) {
  ValidityOptions opts;
  opts.policy = ImportPolicy::ExplicitPremise;
  opts.max_universe = bound;
  return opts;
}

void BM_ValiditySerial(benchmark::State& state) {
  auto opts = sorites_options(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::check_validity(sorites(), opts));
}

void BM_ValidityParallel(benchmark::State& state) {
  auto opts = sorites_options(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_validity(sorites(), opts));
}

ValidityOptions census_options() {
  return {ImportPolicy::ExplicitPremise, ImportScope::AllTerms, 6, {}};
}

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate_classical_moods(census_options()));
}

void BM_CensusParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classical_moods(census_options()));
}

struct IntervalCase {
  std::vector<ProportionConstraint> premises;
  ProportionGoal goal;
};

const IntervalCase& chain() {
  static const IntervalCase c = [] {
    const Term a("A"), b("B"), d("C");
    return IntervalCase{{{{Literal{b}}, a, {Rational(3, 10), Rational(1, 2), {}}},
                         {{Literal{d}}, b, {Rational(7, 10), Rational(9, 10), {}}},
                         {{Literal{d}}, a, {Rational(1, 5), Rational(4, 5), {}}}},
                        {{Literal{b}, Literal{d}}, a}};
  }();
  return c;
}

void BM_IntervalSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::interval_conclude_exhaustive(chain().premises, chain().goal, state.range(0)));
}

void BM_IntervalParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(interval_conclude_exhaustive(chain().premises, chain().goal, state.range(0)));
}

}  // namespace

BENCHMARK(BM_ValiditySerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidityParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalSerial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalParallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
