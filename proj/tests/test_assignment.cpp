// Tests for rational vertex assignments and the structure analysis on them:
// sums, nonnegativity censuses, example assignments, good/bad partitions,
// reach sets, interval-length profiles, and negative chain covers.

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <edgesum/assignment.hpp>
#include <edgesum/cyclic.hpp>
#include <edgesum/errors.hpp>
#include <edgesum/hypergraph.hpp>
#include <edgesum/rational.hpp>

using namespace edgesum;

namespace {

Assignment constant_assignment(long long n, const Rat& value) {
  return Assignment(static_cast<std::size_t>(n), value);
}

std::vector<long long> all_vertices(long long n) {
  std::vector<long long> out(static_cast<std::size_t>(n));
  for (long long v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = v;
  return out;
}

Assignment rotated(const Assignment& f, long long shift) {
  const long long n = static_cast<long long>(f.size());
  Assignment g(f.size());
  for (long long v = 0; v < n; ++v) {
    g[static_cast<std::size_t>(normalize_mod(v + shift, n))] = f[static_cast<std::size_t>(v)];
  }
  return g;
}

}  // namespace

TEST_SUITE("assignment") {
  TEST_CASE("edge and interval sums") {
    SUBCASE("zero assignment sums to zero") {
      const auto f = constant_assignment(10, 0);
      CHECK(edge_sum(f, make_kedge({0, 1, 2}, 10)) == 0);
    }
    SUBCASE("star values") {
      const auto f = example_assignment("star", 10, 3);
      CHECK(edge_sum(f, make_kedge({0, 1, 2}, 10)) == 7);
    }
    SUBCASE("three heavy vertices") {
      const auto f = example_assignment("three_heavy", 10, 3);
      CHECK(edge_sum(f, make_kedge({0, 1, 2}, 10)) == -21);
    }
    SUBCASE("vertices outside the assignment are rejected") {
      const auto f = constant_assignment(5, 1);
      CHECK_THROWS_AS(edge_sum(f, std::vector<long long>{0, 7}), UsageError);
      CHECK_THROWS_AS(edge_sum(f, std::vector<long long>{-1}), UsageError);
    }
    SUBCASE("interval sums split additively") {
      const auto f = random_nonnegative_assignment(17, 99);
      for (long long start : {0LL, 5LL, 14LL}) {
        for (long long len = 0; len <= 17; ++len) {
          const auto whole = interval_from_length(start, len, 17);
          for (long long cut = 0; cut <= len; ++cut) {
            const auto left = interval_from_length(start, cut, 17);
            const auto right = interval_from_length(start + cut, len - cut, 17);
            CHECK(interval_sum(f, whole) == interval_sum(f, left) + interval_sum(f, right));
          }
        }
      }
      CHECK(interval_sum(f, empty_interval(17)) == 0);
    }
  }

  TEST_CASE("nonnegative-edge census on frozen instances") {
    SUBCASE("star on the complete 3-uniform host") {
      const auto h = build_complete(10, 3);
      const auto report = count_nonnegative(example_assignment("star", 10, 3), h);
      CHECK(report.nonnegative_count == binomial(9, 2));
      CHECK(report.threshold == 36);
      CHECK(report.nonnegative_count + report.negative_count == h.edge_count());
    }
    SUBCASE("three heavy vertices dip below the star count") {
      const auto h = build_complete(10, 3);
      const auto report = count_nonnegative(example_assignment("three_heavy", 10, 3), h);
      CHECK(report.nonnegative_count == binomial(7, 3));
      CHECK(report.nonnegative_count == 35);
      CHECK(report.nonnegative_count < binomial(9, 2));
    }
    SUBCASE("tight-cycle assignment leaves a single nonnegative edge") {
      const auto h = build_tight_cycle(10, 3);
      const auto report = count_nonnegative(example_assignment("tight_cycle_k3", 10, 3), h, true);
      CHECK(report.nonnegative_count == 1);
      CHECK(report.threshold == 3);
      REQUIRE(report.nonnegative_edges.has_value());
      REQUIRE(report.nonnegative_edges->size() == 1);
      CHECK(report.nonnegative_edges->front() == make_kedge({0, 1, 2}, 10));
    }
    SUBCASE("collected edges really are the nonnegative ones") {
      const auto h = build_double_interval(36, 3);
      const auto f = random_nonnegative_assignment(36, 5);
      const auto report = count_nonnegative(f, h, true);
      REQUIRE(report.nonnegative_edges.has_value());
      CHECK(static_cast<long long>(report.nonnegative_edges->size()) ==
            static_cast<long long>(report.nonnegative_count));
      for (const auto& edge : *report.nonnegative_edges) CHECK(edge_sum(f, edge) >= 0);
    }
    SUBCASE("size mismatch is rejected") {
      CHECK_THROWS_AS(count_nonnegative(constant_assignment(9, 0), build_complete(10, 3)), UsageError);
    }
  }

  TEST_CASE("example assignments match their frozen values") {
    CHECK(example_assignment("star", 6, 2) ==
          Assignment{Rat(5), Rat(-1), Rat(-1), Rat(-1), Rat(-1), Rat(-1)});
    CHECK(example_assignment("three_heavy", 10, 3) ==
          Assignment{Rat(-7), Rat(-7), Rat(-7), Rat(3), Rat(3), Rat(3), Rat(3), Rat(3), Rat(3), Rat(3)});
    CHECK(example_assignment("tight_cycle_k3", 10, 3) ==
          Assignment{Rat(50), Rat(50), Rat(50), Rat(-101), Rat(50), Rat(50), Rat(-101), Rat(50), Rat(50),
                     Rat(-101)});
    const auto h5k = example_assignment("h5k_mod", 15, 4);
    long long heavies = 0;
    for (long long v = 0; v < 15; ++v) {
      if (v % 3 == 0) {
        CHECK(h5k[static_cast<std::size_t>(v)] == 2);
        ++heavies;
      } else {
        CHECK(h5k[static_cast<std::size_t>(v)] == -1);
      }
    }
    CHECK(heavies == 5);

    SUBCASE("every kind has nonnegative total") {
      CHECK(total_sum(example_assignment("star", 11, 3)) == 0);
      CHECK(total_sum(example_assignment("three_heavy", 13, 4)) == 0);
      CHECK(total_sum(example_assignment("h5k_mod", 20, 5)) == 0);
      CHECK(total_sum(example_assignment("tight_cycle_k3", 10, 3)) >= 0);
      CHECK(total_sum(example_assignment("tight_cycle_k3", 151, 3)) >= 0);
    }
    SUBCASE("kind-specific preconditions") {
      CHECK_THROWS_AS(example_assignment("three_heavy", 11, 3), UsageError);
      CHECK_THROWS_AS(example_assignment("tight_cycle_k3", 10, 4), UsageError);
      CHECK_THROWS_AS(example_assignment("tight_cycle_k3", 11, 3), UsageError);
      CHECK_THROWS_AS(example_assignment("tight_cycle_k3", 154, 3), UsageError);
      CHECK_THROWS_AS(example_assignment("h5k_mod", 16, 4), UsageError);
      CHECK_THROWS_AS(example_assignment("nonsense", 10, 3), UsageError);
    }
    CHECK(example_assignment_kinds().size() == 4);
  }

  TEST_CASE("random assignments are deterministic with nonnegative totals") {
    const auto a = random_nonnegative_assignment(20, 7);
    const auto b = random_nonnegative_assignment(20, 7);
    const auto c = random_nonnegative_assignment(20, 8);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.size() == 20);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      CHECK(total_sum(random_nonnegative_assignment(13, seed)) >= 0);
    }
  }

  TEST_CASE("assignment text parsing") {
    const auto f = parse_assignment_text("3\n-1/2\n7/3\n");
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 3);
    CHECK(f[1] == Rat(-1) / 2);
    CHECK(f[2] == Rat(7) / 3);
    CHECK_THROWS_AS(parse_assignment_text(""), UsageError);
    CHECK_THROWS_AS(parse_assignment_text("1\n\n2\n"), UsageError);
    CHECK_THROWS_AS(parse_assignment_text("1\nbanana\n"), UsageError);
    CHECK_THROWS_AS(parse_assignment_text("1\n3/0\n"), UsageError);
  }

  TEST_CASE("good/bad partition frozen cases") {
    const Rat eps0 = Rat(1) / pow10(9);
    SUBCASE("all-negative assignment leaves every vertex good") {
      const auto part = good_bad_partition(constant_assignment(36, -1), 3, eps0);
      CHECK(part.bad.empty());
      CHECK(part.good.size() == 36);
      CHECK(part.threshold == 1);
    }
    SUBCASE("all-positive assignment makes every vertex bad") {
      const auto part = good_bad_partition(constant_assignment(36, 1), 3, eps0);
      CHECK(part.good.empty());
      CHECK(part.bad.size() == 36);
    }
    SUBCASE("star pins vertex 0 as bad") {
      const auto part = good_bad_partition(example_assignment("star", 60, 4), 4, eps0);
      CHECK(std::find(part.bad.begin(), part.bad.end(), 0) != part.bad.end());
      CHECK(part.good.size() + part.bad.size() == 60);
    }
    SUBCASE("undersized host is rejected") {
      CHECK_THROWS_AS(good_bad_partition(constant_assignment(35, 0), 3, eps0), UsageError);
    }
  }

  TEST_CASE("rightward reach sets") {
    const auto I = closed_interval(0, 9, 10);
    const auto good = all_vertices(10);
    SUBCASE("all-negative assignment reaches everything") {
      const auto reach = r_set(constant_assignment(10, -1), I, 0, good);
      CHECK(reach == std::vector<long long>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    }
    SUBCASE("all-positive assignment reaches nothing") {
      CHECK(r_set(constant_assignment(10, 1), I, 0, good).empty());
    }
    SUBCASE("three heavy vertices: every prefix from 0 stays negative") {
      // Prefix sums from v=0: -7,-14,-21,-18,-15,-12,-9,-6,-3 — all negative.
      const auto reach = r_set(example_assignment("three_heavy", 10, 3), I, 0, good);
      CHECK(reach == std::vector<long long>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    }
    SUBCASE("good-set filtering applies") {
      const auto reach = r_set(constant_assignment(10, -1), I, 0, {2, 5});
      CHECK(reach == std::vector<long long>{2, 5});
    }
    SUBCASE("base vertex must lie in the interval") {
      CHECK_THROWS_AS(r_set(constant_assignment(10, -1), closed_interval(0, 4, 10), 7, good), UsageError);
    }
  }

  TEST_CASE("leftward reach sets mirror the rightward ones") {
    const auto I = closed_interval(0, 9, 10);
    const auto good = all_vertices(10);
    SUBCASE("all-negative assignment") {
      const auto reach = r_minus_set(constant_assignment(10, -1), I, 9, good);
      CHECK(reach == std::vector<long long>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    }
    SUBCASE("all-positive assignment") {
      CHECK(r_minus_set(constant_assignment(10, 1), I, 9, good).empty());
    }
    SUBCASE("split coherence: joint membership certifies a negative interval") {
      // If u is in R(v) and u-1 is in the mirror set of w, then
      // f([v, w]) = f([v, u-1]) + f([u, w]) < 0.
      const auto f = random_nonnegative_assignment(12, 3);
      const auto J = closed_interval(0, 11, 12);
      const auto everyone = all_vertices(12);
      const auto right = r_set(f, J, 0, everyone);
      const auto left = r_minus_set(f, J, 11, everyone);
      for (long long u : right) {
        if (std::find(left.begin(), left.end(), u - 1) != left.end()) {
          CHECK(interval_sum(f, closed_interval(0, 11, 12)) < 0);
        }
      }
    }
  }

  TEST_CASE("reach sets are transitively monotone") {
    // u in R(v) implies R(u) is contained in R(v): the negative prefix from v
    // extends any negative prefix from u.
    const auto I = closed_interval(3, 17, 20);
    const auto good = all_vertices(20);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto f = random_nonnegative_assignment(20, seed);
      for (long long p = 0; p < I.length; ++p) {
        const long long v = normalize_mod(I.start + p, 20);
        const auto reach_v = r_set(f, I, v, good);
        const std::set<long long> reach_v_set(reach_v.begin(), reach_v.end());
        for (long long u : reach_v) {
          for (long long w : r_set(f, I, u, good)) {
            CAPTURE(seed);
            CAPTURE(v);
            CAPTURE(u);
            CHECK(reach_v_set.count(w) == 1);
          }
        }
      }
    }
  }

  TEST_CASE("interval-length profiles around a base vertex") {
    SUBCASE("all-negative assignment fills q_plus") {
      const auto q = q_sets(constant_assignment(20, -1), 5, 0, Rat(1) / 2);
      CHECK(q.q_plus == std::vector<long long>{1, 2, 3, 4});
      CHECK(q.q_minus.empty());
      CHECK(q.q_full == std::vector<long long>{0, 1, 2, 3, 4});
      CHECK(q.threshold == 3);
      CHECK_FALSE(q.impossible);
    }
    SUBCASE("all-positive assignment fills q_minus") {
      const auto q = q_sets(constant_assignment(20, 1), 5, 0, Rat(1) / 2);
      CHECK(q.q_plus.empty());
      CHECK(q.q_minus == std::vector<long long>{1, 2, 3, 4});
      CHECK(q.q_full == std::vector<long long>{0, 1, 2, 3, 4});
    }
    SUBCASE("threshold beyond k-1 is flagged impossible") {
      const auto q = q_sets(constant_assignment(20, -1), 3, 0, Rat(1));
      CHECK(q.threshold == 3);
      CHECK(q.impossible);
      CHECK(q.q_plus.empty());
      CHECK(q.q_minus.empty());
    }
    SUBCASE("q_full always contains 0 and unions the signed parts") {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = random_nonnegative_assignment(30, seed);
        const auto q = q_sets(f, 6, 11, Rat(1) / 4);
        std::set<long long> expected(q.q_plus.begin(), q.q_plus.end());
        expected.insert(q.q_minus.begin(), q.q_minus.end());
        expected.insert(0);
        CHECK(std::set<long long>(q.q_full.begin(), q.q_full.end()) == expected);
      }
    }
  }

  TEST_CASE("profile size: half of the lengths always show up") {
    // For every length x, either x lands in q_plus or k-x lands in q_minus,
    // so q_full covers at least half of [0, k-1]. Sound whenever
    // 2 * ceil(eps * k) <= k: eps = 1/4 always, eps = 1/2 for even k.
    const auto check_instance = [](const Assignment& f, long long k, const Rat& eps) {
      const long long n = static_cast<long long>(f.size());
      for (long long v = 0; v < n; v += 3) {
        const auto q = q_sets(f, k, v, eps);
        CAPTURE(k);
        CAPTURE(v);
        CHECK(2 * static_cast<long long>(q.q_full.size()) >= k);
      }
    };
    for (long long k = 3; k <= 8; ++k) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        check_instance(random_nonnegative_assignment(5 * k, seed), k, Rat(1) / 4);
        if (k % 2 == 0) check_instance(random_nonnegative_assignment(5 * k, seed + 100), k, Rat(1) / 2);
      }
    }
    check_instance(example_assignment("star", 36, 3), 3, Rat(1) / 4);
    check_instance(example_assignment("h5k_mod", 20, 5), 5, Rat(1) / 4);
  }

  TEST_CASE("doubling the profile density fits inside two shifted profiles") {
    // q_full at eps doubled, base v, is contained in the union of the eps
    // profiles at v-r and v-r+k, for every shift r in [0, k]. Exercised on
    // the concrete example assignments.
    const auto check_instance = [](const Assignment& f, long long k) {
      const long long n = static_cast<long long>(f.size());
      const Rat eps = Rat(1) / 4;
      for (long long v = 0; v < n; ++v) {
        const auto doubled = q_sets(f, k, v, 2 * eps);
        for (long long r = 0; r <= k; ++r) {
          const auto left = q_sets(f, k, normalize_mod(v - r, n), eps);
          const auto right = q_sets(f, k, normalize_mod(v - r + k, n), eps);
          std::set<long long> cover(left.q_full.begin(), left.q_full.end());
          cover.insert(right.q_full.begin(), right.q_full.end());
          for (long long x : doubled.q_full) {
            CAPTURE(v);
            CAPTURE(r);
            CAPTURE(x);
            CHECK(cover.count(x) == 1);
          }
        }
      }
    };
    check_instance(example_assignment("star", 36, 3), 3);
    check_instance(example_assignment("three_heavy", 13, 4), 4);
    check_instance(example_assignment("h5k_mod", 20, 5), 5);
    check_instance(example_assignment("tight_cycle_k3", 10, 3), 3);
  }

  TEST_CASE("negative chain covers") {
    SUBCASE("all-negative assignment: the very first chain works") {
      const auto f = constant_assignment(36, -1);
      const auto I = closed_interval(0, 9, 36);
      const auto cover = find_negative_cover(f, 3, I);
      REQUIRE(cover.has_value());
      CHECK(cover->offset == 0);
      CHECK(cover->anchor == 0);
      CHECK(cover->i == 1);
      CHECK(cover->j == 1);
      CHECK(cover->blocks == 2);
      CHECK(cover->covered.start == 0);
      CHECK(cover->covered.length == 12);
      CHECK(cover->chain.size() == 4);
      for (const auto& sum : cover->chain_sums) CHECK(sum == -3);
      CHECK(interval_sum(f, cover->covered) < 0);
    }
    SUBCASE("all-positive assignment: no chain exists") {
      CHECK_FALSE(find_negative_cover(constant_assignment(36, 1), 3, closed_interval(0, 9, 36)).has_value());
    }
    SUBCASE("star instance: postconditions re-checked independently") {
      const auto f = example_assignment("star", 60, 4);
      const auto I = closed_interval(10, 29, 60);
      const auto cover = find_negative_cover(f, 4, I);
      REQUIRE(cover.has_value());
      // J covers I.
      for (const auto v : interval_elements(I)) CHECK(interval_contains(cover->covered, v));
      // |J| <= |I| + 2k.
      CHECK(cover->covered.length <= I.length + 8);
      // f(J) < 0, every chain edge negative, and the chain tiles J exactly.
      CHECK(interval_sum(f, cover->covered) < 0);
      std::vector<long long> tiled;
      REQUIRE(cover->chain.size() == cover->chain_sums.size());
      for (std::size_t t = 0; t < cover->chain.size(); ++t) {
        CHECK(edge_sum(f, cover->chain[t]) == cover->chain_sums[t]);
        CHECK(cover->chain_sums[t] < 0);
        tiled.insert(tiled.end(), cover->chain[t].vertices.begin(), cover->chain[t].vertices.end());
      }
      std::sort(tiled.begin(), tiled.end());
      auto expected = interval_elements(cover->covered);
      std::sort(expected.begin(), expected.end());
      CHECK(tiled == expected);
    }
    SUBCASE("oversized intervals are rejected") {
      CHECK_THROWS_AS(find_negative_cover(constant_assignment(36, -1), 3, closed_interval(0, 30, 36)),
                      UsageError);
    }
  }

  TEST_CASE("census invariance under scaling and rotation") {
    const auto hosts = {build_double_interval(36, 3), build_tight_cycle(10, 3)};
    for (const auto& h : hosts) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto f = random_nonnegative_assignment(h.n, seed);
        const auto base = count_nonnegative(f, h);
        // Positive scaling.
        Assignment scaled = f;
        for (auto& value : scaled) value *= Rat(7) / 3;
        CHECK(count_nonnegative(scaled, h).nonnegative_count == base.nonnegative_count);
        // Rotation (hosts above are rotation-invariant).
        CHECK(count_nonnegative(rotated(f, 5), h).nonnegative_count == base.nonnegative_count);
      }
    }
  }

  TEST_CASE("matchings and tight cycles always keep one nonnegative edge") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto matching = build_matching(2, 3);
      CHECK(count_nonnegative(random_nonnegative_assignment(matching.n, seed), matching)
                .nonnegative_count >= 1);
      const auto cycle = build_tight_cycle(10, 3);
      CHECK(count_nonnegative(random_nonnegative_assignment(cycle.n, seed), cycle).nonnegative_count >=
            1);
    }
  }
}
