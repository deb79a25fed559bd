#include <doctest.h>

#include <edgesum/errors.hpp>
#include <edgesum/hypergraph.hpp>

#include "oracles/naive_hypergraph.hpp"

#include <set>
#include <vector>

using namespace edgesum;

namespace {

oracle::EdgeSet as_edge_set(const UniformHypergraph& h) {
  oracle::EdgeSet out;
  h.for_each_edge([&](const KEdge& e) { out.insert({e.vertices.begin(), e.vertices.end()}); });
  return out;
}

bool constant_profile(const UniformHypergraph& h, long long value) {
  for (long long d : degree_profile(h)) {
    if (d != value) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("hypergraph") {
  TEST_CASE("double-interval: frozen sizes and regularity") {
    const auto h20 = build_double_interval(20, 3);
    CHECK(h20.edge_count() == 80);
    CHECK(constant_profile(h20, 12));

    const auto h15 = build_double_interval(15, 4);
    CHECK(h15.edge_count() == 135);
    CHECK(constant_profile(h15, 36));

    const auto h9 = build_double_interval(9, 3);
    CHECK(h9.edge_count() == 36);
    CHECK(constant_profile(h9, 12));
  }

  TEST_CASE("double-interval matches the definition-literal oracle") {
    for (auto [n, k] : std::vector<std::pair<long long, long long>>{{9, 3}, {20, 3}, {12, 4}, {15, 4}, {15, 5}}) {
      CHECK(as_edge_set(build_double_interval(n, k)) == oracle::double_interval_hypergraph(n, k));
    }
  }

  TEST_CASE("double-interval: distinct representations for n >= 3k") {
    for (auto [n, k] : std::vector<std::pair<long long, long long>>{{9, 3}, {10, 3}, {12, 4}, {20, 5}, {18, 6}}) {
      const auto h = build_double_interval(n, k);
      CHECK(h.edge_count() == BigInt(n * (k - 1) * (k - 1)));
      // Handshake: sum of degrees = k * |E|.
      BigInt total = 0;
      for (long long d : degree_profile(h)) total += d;
      CHECK(total == BigInt(k) * h.edge_count());
    }
  }

  TEST_CASE("complete: lazy storage with exact counts") {
    const auto k42 = build_complete(4, 2);
    CHECK(k42.lazy_complete);
    CHECK(k42.edge_count() == 6);
    CHECK(constant_profile(k42, 3));
    CHECK(as_edge_set(k42) == oracle::complete_hypergraph(4, 2));

    CHECK(build_complete(10, 3).edge_count() == 120);
    CHECK(build_complete(5, 5).edge_count() == 1);
    CHECK(as_edge_set(build_complete(5, 5)) == oracle::complete_hypergraph(5, 5));
    CHECK(as_edge_set(build_complete(6, 3)) == oracle::complete_hypergraph(6, 3));

    // Enumeration is strictly lexicographic.
    std::vector<KEdge> edges = build_complete(6, 3).materialize();
    for (std::size_t q = 1; q < edges.size(); ++q) CHECK(edges[q - 1] < edges[q]);
  }

  TEST_CASE("tight cycle: frozen sizes, regularity and oracle agreement") {
    const auto c103 = build_tight_cycle(10, 3);
    CHECK(c103.edge_count() == 10);
    CHECK(constant_profile(c103, 3));
    CHECK(as_edge_set(c103) == oracle::tight_cycle_hypergraph(10, 3));

    CHECK(build_tight_cycle(6, 3).edge_count() == 6);

    const auto c54 = build_tight_cycle(5, 4);
    CHECK(c54.edge_count() == 5);
    CHECK(constant_profile(c54, 4));
    CHECK(as_edge_set(c54) == oracle::tight_cycle_hypergraph(5, 4));
  }

  TEST_CASE("matching: frozen example and 1-regularity") {
    const auto m22 = build_matching(2, 2);
    CHECK(m22.n == 4);
    CHECK(m22.edges == std::vector<KEdge>{KEdge{{0, 1}}, KEdge{{2, 3}}});

    const auto m33 = build_matching(3, 3);
    CHECK(constant_profile(m33, 1));
    CHECK(as_edge_set(m33) == oracle::matching_hypergraph(3, 3));
  }

  TEST_CASE("rotation invariance of the cyclic families") {
    for (const auto& h : {build_double_interval(12, 3), build_double_interval(16, 4), build_tight_cycle(9, 4)}) {
      const auto edges = as_edge_set(h);
      oracle::EdgeSet rotated;
      for (const auto& e : edges) {
        std::set<long long> r;
        for (long long v : e) r.insert((v + 1) % h.n);
        rotated.insert(std::move(r));
      }
      CHECK(rotated == edges);
    }
  }

  TEST_CASE("degree helpers") {
    CHECK(regular_degree(build_double_interval(20, 3)) == 12);
    CHECK(regular_degree(build_complete(10, 3)) == 36);
    CHECK(regular_degree(build_matching(3, 3)) == 1);
    CHECK(min_degree(build_tight_cycle(10, 3)) == 3);

    // A non-regular hypergraph: drop one edge from a tight cycle.
    auto h = build_tight_cycle(10, 3);
    h.edges.pop_back();
    CHECK(regular_degree(h) == -1);
    CHECK(min_degree(h) < 3);
    CHECK(degree_profile_summary(h).find("distinct") != std::string::npos);
  }

  TEST_CASE("export: shape and lexicographic edges") {
    const auto out = export_hypergraph(build_matching(2, 2));
    CHECK(out["n"] == 4);
    CHECK(out["k"] == 2);
    CHECK(out["label"] == "matching");
    CHECK(out["edge_count"] == "2");
    CHECK(out["edges"].size() == 2);
    CHECK(out["edges"][0] == nlohmann::ordered_json::array({0, 1}));

    const auto lazy = export_hypergraph(build_complete(5, 2), false);
    CHECK(lazy["edge_count"] == "10");
    CHECK_FALSE(lazy.contains("edges"));
  }

  TEST_CASE("precondition violations raise UsageError") {
    CHECK_THROWS_AS(build_double_interval(8, 3), UsageError);
    CHECK_THROWS_AS(build_double_interval(20, 1), UsageError);
    CHECK_THROWS_AS(build_complete(3, 4), UsageError);
    CHECK_THROWS_AS(build_complete(3, 0), UsageError);
    CHECK_THROWS_AS(build_tight_cycle(4, 4), UsageError);
    CHECK_THROWS_AS(build_matching(0, 2), UsageError);
  }
}
