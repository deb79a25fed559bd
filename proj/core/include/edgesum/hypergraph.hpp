#pragma once

// k-uniform hypergraph container plus the four stock constructions:
//   * double-interval hypergraph on Z_n (n >= 3k): all e(v, i, j) with
//     v in Z_n, i, j in [1, k-1]; n(k-1)^2 distinct edges, k(k-1)^2-regular;
//   * complete k-uniform hypergraph (kept lazy: C(n, k) edges);
//   * tight cycle: the n cyclic intervals {i, ..., i+k-1} (n >= k+1);
//   * perfect matching: t disjoint blocks of k consecutive vertices.

#include "edgesum/cyclic.hpp"
#include "edgesum/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace edgesum {

/// A k-uniform hypergraph on vertex set {0, ..., n-1}.  Edge storage is
/// either materialized (lexicographically sorted, distinct) or lazy for the
/// complete hypergraph, whose edge list is often too large to hold.
struct UniformHypergraph {
  long long n = 0;
  long long k = 0;
  std::string label;  // "double-interval", "complete", "tight-cycle", "matching"
  bool lazy_complete = false;
  std::vector<KEdge> edges;  // empty when lazy_complete

  /// Number of edges (exact; C(n, k) for the lazy complete hypergraph).
  BigInt edge_count() const;

  /// Edge count as size_t; throws UsageError when it does not fit.
  std::size_t edge_count_small() const;

  /// Invokes fn on every edge in lexicographic order (enumerating
  /// combinations on the fly when lazy).
  void for_each_edge(const std::function<void(const KEdge&)>& fn) const;

  /// Materialized lexicographic edge list.  Throws UsageError when the edge
  /// count exceeds `cap` (guards accidental enumeration of huge completes).
  std::vector<KEdge> materialize(std::size_t cap = 2'000'000) const;
};

/// Double-interval hypergraph on Z_n.  Preconditions: k >= 2, n >= 3k.
UniformHypergraph build_double_interval(long long n, long long k);

/// Complete k-uniform hypergraph, lazy.  Preconditions: 1 <= k <= n.
UniformHypergraph build_complete(long long n, long long k);

/// Tight cycle: edges {i, ..., i+k-1} mod n.  Preconditions: k >= 2, n >= k+1.
UniformHypergraph build_tight_cycle(long long n, long long k);

/// Perfect matching with t blocks of k consecutive vertices (n = t*k).
/// Preconditions: t >= 1, k >= 1.
UniformHypergraph build_matching(long long t, long long k);

/// Per-vertex degrees.  Works on lazy complete hypergraphs via the closed
/// form C(n-1, k-1); throws UsageError when a degree exceeds int64.
std::vector<long long> degree_profile(const UniformHypergraph& h);

/// The constant degree if the hypergraph is regular, or -1 otherwise.
long long regular_degree(const UniformHypergraph& h);

/// Minimum degree (the threshold delta used by the threshold-property
/// oracle; equals the degree for regular hypergraphs).
long long min_degree(const UniformHypergraph& h);

/// Compact human-readable degree profile summary for error messages,
/// e.g. "degrees: min 1, max 3, distinct {1, 3}".
std::string degree_profile_summary(const UniformHypergraph& h);

/// Serialization: {"n", "k", "label", "edge_count", "edges"} with the edge
/// list in lexicographic order.  Materializes lazy hypergraphs (same cap as
/// `materialize`).
nlohmann::ordered_json export_hypergraph(const UniformHypergraph& h, bool include_edges = true);

}  // namespace edgesum
