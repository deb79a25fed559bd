// Microbenchmarks for the hot paths: host construction, the multiplicity
// census, nonnegative-edge counting, exact LP feasibility, the exact
// minimiser, sumset arithmetic, and the audit sweeps.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "edgesum/assignment.hpp"
#include "edgesum/averaging.hpp"
#include "edgesum/family_catalog.hpp"
#include "edgesum/hypergraph.hpp"
#include "edgesum/oracle.hpp"
#include "edgesum/sumset.hpp"
#include "edgesum/sweep.hpp"

namespace {

using edgesum::Assignment;
using edgesum::ResidueSet;
using edgesum::UniformHypergraph;

void BM_BuildDoubleInterval(benchmark::State& state) {
  const long long k = state.range(0);
  const long long n = 12 * k;
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::build_double_interval(n, k));
  }
  state.SetLabel("n=12k, edges=n(k-1)^2");
}
BENCHMARK(BM_BuildDoubleInterval)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

void BM_MultiplicityCensus(benchmark::State& state) {
  const long long k = state.range(0);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::multiplicity_census(12 * k, k, threads));
  }
}
BENCHMARK(BM_MultiplicityCensus)->Args({4, 1})->Args({4, 4})->Args({6, 1})->Args({6, 4});

void BM_CountNonnegative(benchmark::State& state) {
  const long long k = state.range(0);
  const UniformHypergraph host = edgesum::build_double_interval(12 * k, k);
  const Assignment f = edgesum::random_nonnegative_assignment(12 * k, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::count_nonnegative(f, host));
  }
}
BENCHMARK(BM_CountNonnegative)->Arg(3)->Arg(6)->Arg(10);

void BM_PatternFeasibility(benchmark::State& state) {
  // Feasibility LP for "the first m edges are all negative" on H_{36,3}.
  const UniformHypergraph host = edgesum::build_double_interval(36, 3);
  const long long m = state.range(0);
  const std::vector<edgesum::KEdge> pattern(host.edges.begin(), host.edges.begin() + m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::feasible_negative_pattern(host, pattern));
  }
}
BENCHMARK(BM_PatternFeasibility)->Arg(4)->Arg(12)->Arg(24);

void BM_MinNonnegativeExact(benchmark::State& state) {
  const UniformHypergraph host = edgesum::build_matching(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::min_nonnegative_exact(host));
  }
}
BENCHMARK(BM_MinNonnegativeExact)->Args({2, 3})->Args({3, 3})->Args({2, 5});

void BM_PermutationExpectationExact(benchmark::State& state) {
  const long long n = state.range(0);
  const UniformHypergraph host = edgesum::build_tight_cycle(n, 3);
  const Assignment f = edgesum::random_nonnegative_assignment(n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::permutation_expectation_exact(f, host));
  }
}
BENCHMARK(BM_PermutationExpectationExact)->Arg(6)->Arg(7)->Arg(8);

void BM_PermutationExpectationMc(benchmark::State& state) {
  const UniformHypergraph host = edgesum::build_double_interval(36, 3);
  const Assignment f = edgesum::random_nonnegative_assignment(36, 11);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::permutation_expectation_mc(f, host, 20000, 1, threads));
  }
}
BENCHMARK(BM_PermutationExpectationMc)->Arg(1)->Arg(4);

void BM_Sumset(benchmark::State& state) {
  const long long k = state.range(0);
  ResidueSet a(k), b(k);
  for (long long x = 0; x < k; x += 3) a.insert(x);
  for (long long x = 1; x < k; x += 2) b.insert(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::sumset(a, b));
  }
}
BENCHMARK(BM_Sumset)->Arg(16)->Arg(64)->Arg(512)->Arg(4096);

void BM_Stabilizer(benchmark::State& state) {
  const long long k = state.range(0);
  ResidueSet a(k);
  for (long long x = 0; x < k; x += 2) a.insert(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::stabilizer(a));
  }
}
BENCHMARK(BM_Stabilizer)->Arg(64)->Arg(512)->Arg(4096);

void BM_KneserExhaustive(benchmark::State& state) {
  const long long k_max = state.range(0);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::kneser_exhaustive_audit(k_max, threads));
  }
}
BENCHMARK(BM_KneserExhaustive)->Args({6, 1})->Args({6, 4})->Args({8, 4});

void BM_SpecialPairSweep(benchmark::State& state) {
  const long long k_max = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgesum::special_pair_sweep(4, k_max));
  }
}
BENCHMARK(BM_SpecialPairSweep)->Arg(12)->Arg(20)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
