#pragma once

// Pair-multiplicity counting p(i, j) = #{edges containing both i and j} and
// the five-heavy sweep: on n = 5(k-1) vertices the periodic heavy assignment
// makes an edge nonnegative exactly when it holds two heavy vertices, so the
// nonnegative total equals 5 p(0, k-1) + 5 p(0, 2(k-1)).  Three independent
// routes to that total are computed and compared, and the sweep reports the
// smallest k where the total drops below the degree k(k-1)^2.

#include "edgesum/hypergraph.hpp"
#include "edgesum/rational.hpp"

#include <optional>
#include <vector>

namespace edgesum {

/// p(i, j): number of edges containing both vertices.  Zero when i == j by
/// convention; symmetric in (i, j); closed form C(n-2, k-2) on the lazy
/// complete hypergraph.  Throws UsageError when a vertex is out of range.
struct PairMultiplicity {
  long long i = 0;
  long long j = 0;
  BigInt count;
};

PairMultiplicity pair_multiplicity(const UniformHypergraph& h, long long i, long long j);

/// One five-heavy comparison at a fixed k >= 3 (n = 5(k-1)).
struct SpecialPairEntry {
  long long k = 0;
  long long n = 0;               // 5(k-1)
  BigInt p_near;                 // p(0, k-1), enumerated
  BigInt p_far;                  // p(0, 2(k-1)), enumerated
  BigInt condition_near;         // p(0, k-1) by closed slot conditions
  BigInt pair_route_total;       // 5 p_near + 5 p_far
  BigInt assignment_route_total; // nonnegative edges of the periodic assignment
  BigInt degree;                 // k(k-1)^2
  bool far_is_k_minus_1 = false;
  bool routes_agree = false;     // all three totals/counters match
  bool below_degree = false;     // pair_route_total < degree
};

SpecialPairEntry special_pair_check(long long k);

/// Runs special_pair_check for k = k_min..k_max (3 <= k_min <= k_max) and
/// reports the smallest k whose nonnegative total falls below the degree —
/// a computed output, never assumed.
struct SpecialPairSweep {
  long long k_min = 0;
  long long k_max = 0;
  std::vector<SpecialPairEntry> entries;
  bool all_routes_agree = false;
  std::optional<long long> smallest_failing_k;
};

SpecialPairSweep special_pair_sweep(long long k_min, long long k_max);

}  // namespace edgesum
