#pragma once

// Rational vertex assignments on Z_n and the structure analysis built on
// them: exact edge/interval sums, nonnegative-edge censuses, named example
// assignments, the good/bad vertex partition, directional negative-prefix
// reach sets, interval-length profiles around a base vertex, and the search
// for an all-negative edge chain covering a given interval.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgesum/cyclic.hpp"
#include "edgesum/hypergraph.hpp"
#include "edgesum/rational.hpp"

namespace edgesum {

/// A rational weight for every vertex of Z_n; the index is the vertex id.
using Assignment = std::vector<Rat>;

/// Exact sum of f over all vertices.
Rat total_sum(const Assignment& f);

/// Exact sum of f over the vertices of an edge (or any vertex list).
/// Vertices outside [0, |f|) are a usage error.
Rat edge_sum(const Assignment& f, const KEdge& edge);
Rat edge_sum(const Assignment& f, const std::vector<long long>& vertices);

/// Exact sum of f over a clockwise interval (empty interval sums to 0).
Rat interval_sum(const Assignment& f, const ClockwiseInterval& interval);

/// Census of edges with nonnegative sum under f.
struct NonnegativityReport {
  BigInt nonnegative_count{0};
  BigInt negative_count{0};
  /// Minimum degree of the host, the bar the count is compared against.
  long long threshold = 0;
  /// The nonnegative edges themselves, filled only when collecting.
  std::optional<std::vector<KEdge>> nonnegative_edges;
};
NonnegativityReport count_nonnegative(const Assignment& f, const UniformHypergraph& h,
                                      bool collect = false);

/// Named example assignments: "star" (n-1 at vertex 0, -1 elsewhere),
/// "three_heavy" (2-3k on three consecutive vertices, 3 elsewhere; needs
/// n = 3k+1), "tight_cycle_k3" (50 everywhere except -101 on nonzero
/// multiples of 3; needs k = 3, n = 1 mod 3, n <= 151), and "h5k_mod"
/// (k-2 on multiples of k-1, -1 elsewhere; needs n = 5(k-1)). Every kind
/// returns a total sum >= 0.
Assignment example_assignment(const std::string& kind, long long n, long long k);
const std::vector<std::string>& example_assignment_kinds();

/// Deterministic pseudo-random assignment with small rational values and a
/// nonnegative total (the first vertex absorbs any deficit).
Assignment random_nonnegative_assignment(long long n, std::uint64_t seed);

/// Parses "one value per line" text; each line is an integer or "p/q".
Assignment parse_assignment_text(const std::string& text);

/// Vertices split by how many edges of their catalog family are nonnegative:
/// a vertex is bad when at least ceil(eps0 * k^2) of them are.
struct GoodBadPartition {
  std::vector<long long> good;
  std::vector<long long> bad;
  long long threshold = 0;  ///< ceil(eps0 * k^2)
};
GoodBadPartition good_bad_partition(const Assignment& f, long long k, const Rat& eps0);

/// Rightward reach: vertices u of I strictly after v (clockwise) such that
/// f([v, u-1]) < 0 and u belongs to the given good set. Requires v in I.
std::vector<long long> r_set(const Assignment& f, const ClockwiseInterval& I, long long v,
                             const std::vector<long long>& good);

/// Leftward mirror: vertices u of I strictly before v such that
/// f([u+1, v]) < 0 and u belongs to the good set. Requires v in I.
std::vector<long long> r_minus_set(const Assignment& f, const ClockwiseInterval& I, long long v,
                                   const std::vector<long long>& good);

/// Interval-length profile around a base vertex: j lands in q_plus when at
/// least ceil(eps*k) starts i in [1,k-1] give f([v+i, v+i+j-1]) < 0, and
/// k-j lands in q_minus when at least that many give a nonnegative sum.
/// q_full is their union together with 0.
struct QSets {
  std::vector<long long> q_plus;
  std::vector<long long> q_minus;
  std::vector<long long> q_full;
  long long threshold = 0;    ///< ceil(eps * k)
  bool impossible = false;    ///< threshold exceeds the k-1 available starts
};
QSets q_sets(const Assignment& f, long long k, long long v, const Rat& eps);

/// A chain of vertex-disjoint edges e(s+2tk, i, j), e(s+2tk+i, j, k-i) whose
/// union J is an interval covering I with |J| <= |I| + 2k and every edge sum
/// negative (hence f(J) < 0).
struct NegativeCover {
  long long anchor = 0;  ///< chain start s = (min I - offset) mod n
  long long offset = 0;  ///< distance the chain starts before min I, in [0, 2k)
  long long i = 0;
  long long j = 0;
  long long blocks = 0;  ///< number of consecutive 2k-blocks
  ClockwiseInterval covered{0, 0, 1};  ///< J, of length 2k * blocks
  std::vector<KEdge> chain;            ///< the 2 * blocks edges in chain order
  std::vector<Rat> chain_sums;         ///< their sums, all negative
};

/// Searches anchors 0..2k-1 before min I and all (i, j) in [1,k-1]^2 in
/// lexicographic order, returning the first chain whose edges are all
/// negative; std::nullopt reports that every candidate chain contains a
/// nonnegative edge (information, not an error). Requires |I| <= n - 2k.
std::optional<NegativeCover> find_negative_cover(const Assignment& f, long long k,
                                                 const ClockwiseInterval& I);

}  // namespace edgesum
