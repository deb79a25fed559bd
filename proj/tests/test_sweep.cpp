// Sweep suite: pair-multiplicity counting against the set-literal reference
// constructions, degree/pair identities, and the five-heavy sweep whose
// three independent totals must coincide.

#include <doctest.h>

#include <edgesum/errors.hpp>
#include <edgesum/hypergraph.hpp>
#include <edgesum/rational.hpp>
#include <edgesum/sweep.hpp>

#include <set>

#include "oracles/naive_hypergraph.hpp"

using namespace edgesum;

namespace {

long long reference_pair_count(const oracle::EdgeSet& edges, long long i, long long j) {
  if (i == j) return 0;
  long long count = 0;
  for (const auto& e : edges) {
    if (e.count(i) != 0 && e.count(j) != 0) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("sweep");

TEST_CASE("pair multiplicity on hand-checked hosts") {
  const auto matching = build_matching(2, 2);
  CHECK(pair_multiplicity(matching, 0, 1).count == 1);
  CHECK(pair_multiplicity(matching, 0, 2).count == 0);
  CHECK(pair_multiplicity(matching, 3, 3).count == 0);

  const auto cycle = build_tight_cycle(6, 3);
  CHECK(pair_multiplicity(cycle, 0, 1).count == 2);
  CHECK(pair_multiplicity(cycle, 0, 2).count == 1);
  CHECK(pair_multiplicity(cycle, 0, 3).count == 0);

  const auto complete = build_complete(10, 3);
  CHECK(pair_multiplicity(complete, 4, 7).count == 8);  // C(8, 1)
  CHECK(pair_multiplicity(complete, 4, 4).count == 0);

  CHECK_THROWS_AS(pair_multiplicity(cycle, -1, 2), UsageError);
  CHECK_THROWS_AS(pair_multiplicity(cycle, 0, 6), UsageError);
}

TEST_CASE("pair multiplicity matches the reference constructions") {
  const auto h = build_double_interval(12, 3);
  const auto ref = oracle::double_interval_hypergraph(12, 3);
  for (long long i = 0; i < 12; ++i) {
    for (long long j = 0; j < 12; ++j) {
      CHECK(pair_multiplicity(h, i, j).count == reference_pair_count(ref, i, j));
    }
  }

  const auto c = build_complete(7, 4);
  const auto cref = oracle::complete_hypergraph(7, 4);
  for (long long j = 1; j < 7; ++j) {
    CHECK(pair_multiplicity(c, 0, j).count == reference_pair_count(cref, 0, j));
  }
}

TEST_CASE("pair multiplicities are symmetric and sum to degree times (k-1)") {
  for (const auto& h : {build_double_interval(20, 4), build_tight_cycle(9, 4)}) {
    CAPTURE(h.label);
    const auto degrees = degree_profile(h);
    for (long long i : {0LL, 3LL, 7LL}) {
      BigInt row_sum = 0;
      for (long long j = 0; j < h.n; ++j) {
        const BigInt pij = pair_multiplicity(h, i, j).count;
        CHECK(pij == pair_multiplicity(h, j, i).count);
        row_sum += pij;
      }
      // Every edge at i contributes its k-1 other vertices to the row.
      CHECK(row_sum == BigInt(degrees[static_cast<std::size_t>(i)]) * (h.k - 1));
    }
  }
}

TEST_CASE("five-heavy check at hand-verified k") {
  const auto k3 = special_pair_check(3);
  CHECK(k3.n == 10);
  CHECK(k3.p_near == 2);
  CHECK(k3.p_far == 2);
  CHECK(k3.pair_route_total == 20);
  CHECK(k3.degree == 12);
  CHECK(k3.routes_agree);
  CHECK_FALSE(k3.below_degree);

  const auto k4 = special_pair_check(4);
  CHECK(k4.p_near == 7);
  CHECK(k4.p_far == 3);
  CHECK(k4.pair_route_total == 50);
  CHECK(k4.degree == 36);
  CHECK(k4.routes_agree);
  CHECK_FALSE(k4.below_degree);

  const auto k12 = special_pair_check(12);
  CHECK(k12.p_near == 275);
  CHECK(k12.p_far == 11);
  CHECK(k12.pair_route_total == 1430);
  CHECK(k12.degree == 1452);
  CHECK(k12.routes_agree);
  CHECK(k12.below_degree);

  CHECK_THROWS_AS(special_pair_check(2), UsageError);
}

TEST_CASE("five-heavy sweep: route agreement and the computed threshold") {
  const auto sweep = special_pair_sweep(4, 15);
  CHECK(sweep.all_routes_agree);
  CHECK(sweep.entries.size() == 12);
  for (const auto& entry : sweep.entries) {
    CAPTURE(entry.k);
    CHECK(entry.routes_agree);
    CHECK(entry.far_is_k_minus_1);
    // Independent closed form for the near count.
    CHECK(entry.p_near == BigInt(entry.k - 1) * (entry.k - 2) * (entry.k + 3) / 6);
    // Below-degree is equivalent to 5(near + far) < k(k-1)^2.
    CHECK(entry.below_degree == (entry.pair_route_total < entry.degree));
  }
  // 5(k-1)(k-2)(k+3)/6 + 5(k-1) < k(k-1)^2 first happens at k = 12.
  REQUIRE(sweep.smallest_failing_k.has_value());
  CHECK(*sweep.smallest_failing_k == 12);
  for (const auto& entry : sweep.entries) {
    CHECK(entry.below_degree == (entry.k >= 12));
  }

  CHECK_THROWS_AS(special_pair_sweep(2, 5), UsageError);
  CHECK_THROWS_AS(special_pair_sweep(6, 5), UsageError);
}

TEST_SUITE_END();
