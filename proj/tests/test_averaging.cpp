// Averaging suite: exact permutation expectations (multiset enumeration)
// against the raw-factorial reference, the closed-form identity for regular
// hosts, Monte Carlo agreement within standard errors, and the derived
// complete-hypergraph lower bound.

#include <doctest.h>

#include <edgesum/assignment.hpp>
#include <edgesum/averaging.hpp>
#include <edgesum/errors.hpp>
#include <edgesum/hypergraph.hpp>
#include <edgesum/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "oracles/naive_expectation.hpp"

using namespace edgesum;

namespace {

std::vector<std::vector<long long>> raw_edges(const UniformHypergraph& h) {
  std::vector<std::vector<long long>> out;
  h.for_each_edge([&](const KEdge& e) { out.push_back(e.vertices); });
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("averaging");

TEST_CASE("frozen two-edge matching expectation") {
  const auto h = build_matching(2, 2);
  const Assignment f{Rat(3), Rat(-1), Rat(-1), Rat(-1)};
  CHECK(permutation_expectation_exact(f, h) == Rat(1));
  CHECK(permutation_expectation_formula(f, h) == Rat(1));
  CHECK(oracle::permutation_expectation(f, raw_edges(h)) == Rat(1));
}

TEST_CASE("the all-zero assignment makes every edge nonnegative always") {
  for (const auto& h : {build_matching(2, 2), build_tight_cycle(6, 3), build_complete(6, 2)}) {
    const Assignment zero(static_cast<std::size_t>(h.n), Rat(0));
    const Rat m{h.edge_count()};
    CHECK(permutation_expectation_exact(zero, h) == m);
    CHECK(permutation_expectation_formula(zero, h) == m);
    const auto mc = permutation_expectation_mc(zero, h, 1000, 5);
    CHECK(mc.estimate == m);
    CHECK(mc.se_squared == 0);
    CHECK(within_standard_errors(mc.estimate, m, mc.se_squared, 3));
  }
}

TEST_CASE("formula on the complete host is the identity") {
  const auto k = build_complete(6, 3);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto f = random_nonnegative_assignment(6, seed);
    CHECK(permutation_expectation_formula(f, k) == Rat(count_nonnegative(f, k).nonnegative_count));
  }
}

TEST_CASE("exact expectation equals the closed form on every regular host tried") {
  const std::vector<UniformHypergraph> hosts = {
      build_matching(2, 2), build_matching(2, 3),    build_matching(2, 4),
      build_matching(3, 2), build_tight_cycle(6, 3), build_tight_cycle(7, 3),
      build_tight_cycle(8, 2), build_complete(6, 2), build_complete(7, 3),
  };
  for (const auto& h : hosts) {
    CAPTURE(h.label);
    CAPTURE(h.n);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const auto f = random_nonnegative_assignment(h.n, seed);
      CHECK(permutation_expectation_exact(f, h) == permutation_expectation_formula(f, h));
    }
  }
}

TEST_CASE("exact expectation matches the raw-factorial reference") {
  const std::vector<UniformHypergraph> hosts = {
      build_matching(3, 2),
      build_tight_cycle(5, 2),
      build_tight_cycle(6, 2),
      build_complete(5, 3),
  };
  for (const auto& h : hosts) {
    CAPTURE(h.label);
    for (std::uint64_t seed = 11; seed <= 13; ++seed) {
      const auto f = random_nonnegative_assignment(h.n, seed);
      CHECK(permutation_expectation_exact(f, h) ==
            oracle::permutation_expectation(f, raw_edges(h)));
    }
  }
}

TEST_CASE("exact expectation is invariant under pre-permuting the assignment") {
  const auto h = build_tight_cycle(6, 3);
  const auto f = random_nonnegative_assignment(6, 99);
  Assignment rotated(f.begin() + 2, f.end());
  rotated.insert(rotated.end(), f.begin(), f.begin() + 2);
  Assignment reversed(f.rbegin(), f.rend());
  const Rat expect = permutation_expectation_exact(f, h);
  CHECK(permutation_expectation_exact(rotated, h) == expect);
  CHECK(permutation_expectation_exact(reversed, h) == expect);
}

TEST_CASE("matchings keep at least one nonnegative edge in expectation") {
  for (const auto& h : {build_matching(2, 2), build_matching(2, 3), build_matching(3, 2)}) {
    for (std::uint64_t seed = 21; seed <= 25; ++seed) {
      const auto f = random_nonnegative_assignment(h.n, seed);
      CHECK(permutation_expectation_exact(f, h) >= 1);
    }
  }
}

TEST_CASE("refusals: oversized exact mode, non-regular hosts, bad parameters") {
  const auto big = build_tight_cycle(9, 3);
  const Assignment f9(9, Rat(0));
  CHECK_THROWS_AS(permutation_expectation_exact(f9, big), UsageError);

  UniformHypergraph lopsided;
  lopsided.n = 3;
  lopsided.k = 2;
  lopsided.label = "custom";
  lopsided.edges = {make_kedge({0, 1}, 3), make_kedge({1, 2}, 3)};
  const Assignment f3(3, Rat(0));
  CHECK_THROWS_WITH_AS(permutation_expectation_formula(f3, lopsided),
                       doctest::Contains("degrees"), UsageError);
  CHECK_THROWS_AS(averaging_lower_bound(lopsided, 1), UsageError);

  const auto h = build_matching(2, 2);
  const Assignment f4(4, Rat(0));
  CHECK_THROWS_AS(permutation_expectation_mc(f4, h, 0, 1), UsageError);
  CHECK_THROWS_AS(permutation_expectation_mc(f4, h, 10, 1, 0), UsageError);
  CHECK_THROWS_AS(permutation_expectation_exact(Assignment(5, Rat(0)), h), UsageError);
}

TEST_CASE("monte carlo battery lands within three standard errors") {
  const auto h = build_matching(2, 2);
  const Assignment f{Rat(3), Rat(-1), Rat(-1), Rat(-1)};
  const Rat exact = permutation_expectation_exact(f, h);
  int hits = 0;
  const int trials = 20;
  for (int seed = 1; seed <= trials; ++seed) {
    const auto mc = permutation_expectation_mc(f, h, 100000, static_cast<std::uint64_t>(seed));
    if (within_standard_errors(mc.estimate, exact, mc.se_squared, 3)) ++hits;
  }
  CHECK(hits >= trials - 1);
}

TEST_CASE("monte carlo is deterministic and thread-count independent") {
  const auto h = build_double_interval(36, 3);
  const auto f = random_nonnegative_assignment(36, 42);
  const auto one = permutation_expectation_mc(f, h, 30000, 7, 1);
  const auto again = permutation_expectation_mc(f, h, 30000, 7, 1);
  const auto four = permutation_expectation_mc(f, h, 30000, 7, 4);
  CHECK(one.estimate == again.estimate);
  CHECK(one.se_squared == again.se_squared);
  CHECK(one.estimate == four.estimate);
  CHECK(one.se_squared == four.se_squared);
}

TEST_CASE("monte carlo tracks the closed form on the double-interval host") {
  const auto h = build_double_interval(36, 3);
  const auto f = random_nonnegative_assignment(36, 42);
  const Rat formula = permutation_expectation_formula(f, h);
  const auto mc = permutation_expectation_mc(f, h, 100000, 2026, 4);
  CHECK(mc.se_squared > 0);
  CHECK(within_standard_errors(mc.estimate, formula, mc.se_squared, 3));
}

TEST_CASE("a one-heavy assignment has zero variance on any regular host") {
  // Every permutation puts the single nonnegative-sum witness vertex at a
  // position of equal degree, so the count never moves.
  const auto h = build_double_interval(36, 3);
  const auto f = example_assignment("star", 36, 3);
  const auto mc = permutation_expectation_mc(f, h, 5000, 3, 2);
  CHECK(mc.se_squared == 0);
  CHECK(mc.estimate == permutation_expectation_formula(f, h));
}

TEST_CASE("derived lower bound for the complete hypergraph") {
  CHECK(averaging_lower_bound(build_matching(2, 3), 1) == binomial(5, 2));
  CHECK(averaging_lower_bound(build_matching(4, 2), 1) == binomial(7, 1));
  CHECK(averaging_lower_bound(build_matching(3, 3), 0) == 0);
  CHECK(averaging_lower_bound(build_complete(8, 2), 7) == 7);
  // d = C(n-1, k-1) on the complete host: the bound returns certified_min.
  CHECK(averaging_lower_bound(build_complete(9, 4), 5) == 5);
  // Rounding goes up: 1-regular matching certifies nothing fractional.
  CHECK(averaging_lower_bound(build_double_interval(36, 3), 5) ==
        rat_ceil(Rat(BigInt(5) * binomial(35, 2), BigInt(12))));
  CHECK_THROWS_AS(averaging_lower_bound(build_matching(2, 2), -1), UsageError);
}

TEST_SUITE_END();
