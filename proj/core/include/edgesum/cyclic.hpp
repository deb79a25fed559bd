#pragma once

// Cyclic-index arithmetic: residues, closed clockwise intervals, k-element
// edges, and the two-interval edge pattern e(v, i, j) that underlies the
// double-interval hypergraph construction.

#include <compare>
#include <cstdint>
#include <vector>

namespace edgesum {

/// Canonical residue modulo a positive modulus.
struct CyclicIndex {
  long long value = 0;    // always in [0, modulus)
  long long modulus = 1;  // > 0

  friend bool operator==(const CyclicIndex&, const CyclicIndex&) = default;
};

/// Reduces x into [0, n); works for negative x.  Throws UsageError if n <= 0.
long long normalize_mod(long long x, long long n);

/// Constructs a canonical CyclicIndex.
CyclicIndex cyclic_index(long long value, long long modulus);

/// A closed clockwise interval on Z_n, stored as (start, length).
/// length == 0 encodes the empty interval; length may be as large as n
/// (the full cycle).  Elements are start, start+1, ..., start+length-1 (mod n).
struct ClockwiseInterval {
  long long start = 0;   // canonical residue in [0, modulus)
  long long length = 0;  // in [0, modulus]
  long long modulus = 1;

  friend bool operator==(const ClockwiseInterval&, const ClockwiseInterval&) = default;
};

/// The closed clockwise interval [a, b] on Z_n; its length is
/// ((b - a) mod n) + 1, so [a, a] is the singleton {a} and [a, a-1] is the
/// full cycle.  Throws UsageError if n <= 0.
ClockwiseInterval closed_interval(long long a, long long b, long long n);

/// Interval from an explicit start and length; length must be in [0, n].
ClockwiseInterval interval_from_length(long long start, long long length, long long n);

/// The empty interval on Z_n.
ClockwiseInterval empty_interval(long long n);

/// Elements in clockwise order starting at `start`.
std::vector<long long> interval_elements(const ClockwiseInterval& interval);

/// Membership test for a vertex (normalized before testing).
bool interval_contains(const ClockwiseInterval& interval, long long x);

/// Last element of a non-empty interval; throws UsageError on the empty one.
long long interval_last(const ClockwiseInterval& interval);

/// A k-element edge: sorted, distinct vertices in [0, n).  The vertex list is
/// the identity of the edge; hypergraphs store edges in lexicographic order.
struct KEdge {
  std::vector<long long> vertices;

  friend bool operator==(const KEdge&, const KEdge&) = default;
  friend auto operator<=>(const KEdge&, const KEdge&) = default;
};

/// Builds a KEdge from an arbitrary list: normalizes mod n, sorts, and
/// removes duplicates.  (Degenerate parameter choices can collapse vertices;
/// callers that require exactly k vertices must check `vertices.size()`.)
KEdge make_kedge(std::vector<long long> vertices, long long n);

/// Parameter block for the two-interval edge
///   e(v, i, j) = [v, v+i-1]  union  [v+i+j, v+j+k-1]   (mod n).
/// The representation is total: out-of-range parameters are representable and
/// `params_in_range()` reports whether i, j lie in [1, k-1].
struct DoubleIntervalSpec {
  long long v = 0;
  long long i = 1;
  long long j = 1;
  long long k = 2;
  long long n = 6;

  bool params_in_range() const { return i >= 1 && i <= k - 1 && j >= 1 && j <= k - 1; }
};

/// The two arcs of e(v, i, j) in clockwise order: first [v, v+i-1] (length i),
/// then [v+i+j, v+j+k-1] (length k-i).  Exposed for interval-level reasoning;
/// throws UsageError when a length is negative or n <= 0.
std::vector<ClockwiseInterval> double_interval_arcs(const DoubleIntervalSpec& spec);

/// The vertex set of e(v, i, j) as a KEdge.  For parameters in range and
/// n >= 3k the result has exactly k distinct vertices.
KEdge double_interval_edge(const DoubleIntervalSpec& spec);
KEdge double_interval_edge(long long v, long long i, long long j, long long k, long long n);

}  // namespace edgesum
