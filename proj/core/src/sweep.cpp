#include "edgesum/sweep.hpp"

#include "edgesum/assignment.hpp"
#include "edgesum/errors.hpp"

#include <algorithm>

namespace edgesum {

namespace {

void require_vertex(const UniformHypergraph& h, long long v, const char* who) {
  if (v < 0 || v >= h.n) {
    throw UsageError(std::string(who) + ": vertex " + std::to_string(v) +
                     " out of range [0, " + std::to_string(h.n) + ")");
  }
}

/// p(0, k-1) by the slot conditions: an edge holds both 0 and k-1 exactly
/// when its start is -u for some u in [0, k-2], its first run covers 0
/// (i >= u+1), its second run starts by k-1 (j >= max(u, 1)), and the gap
/// does not push k-1 out (i + j <= u + k - 1).
BigInt conditioned_near_count(long long k) {
  BigInt total = 0;
  for (long long u = 0; u <= k - 2; ++u) {
    for (long long i = std::max(1LL, u + 1); i <= k - 1; ++i) {
      for (long long j = std::max(u, 1LL); j <= k - 1; ++j) {
        if (i + j <= u + k - 1) total += 1;
      }
    }
  }
  return total;
}

}  // namespace

PairMultiplicity pair_multiplicity(const UniformHypergraph& h, long long i, long long j) {
  require_vertex(h, i, "pair_multiplicity");
  require_vertex(h, j, "pair_multiplicity");
  PairMultiplicity out;
  out.i = i;
  out.j = j;
  if (i == j) return out;
  if (h.lazy_complete) {
    out.count = binomial(h.n - 2, h.k - 2);
    return out;
  }
  for (const KEdge& e : h.edges) {
    if (std::binary_search(e.vertices.begin(), e.vertices.end(), i) &&
        std::binary_search(e.vertices.begin(), e.vertices.end(), j)) {
      out.count += 1;
    }
  }
  return out;
}

SpecialPairEntry special_pair_check(long long k) {
  if (k < 3) {
    throw UsageError("special_pair_check: k must be >= 3 (n = 5(k-1) needs at least 3k), got " +
                     std::to_string(k));
  }
  SpecialPairEntry out;
  out.k = k;
  out.n = 5 * (k - 1);

  const UniformHypergraph h = build_double_interval(out.n, k);
  out.p_near = pair_multiplicity(h, 0, k - 1).count;
  out.p_far = pair_multiplicity(h, 0, 2 * (k - 1)).count;
  out.condition_near = conditioned_near_count(k);
  out.pair_route_total = 5 * (out.p_near + out.p_far);

  const Assignment f = example_assignment("h5k_mod", out.n, k);
  out.assignment_route_total = count_nonnegative(f, h).nonnegative_count;

  out.degree = BigInt(k) * (k - 1) * (k - 1);
  const long long measured = regular_degree(h);
  if (measured < 0 || BigInt(measured) != out.degree) {
    throw Error("special_pair_check: host degree " + std::to_string(measured) +
                " does not match k(k-1)^2");
  }

  out.far_is_k_minus_1 = out.p_far == k - 1;
  out.routes_agree = out.pair_route_total == out.assignment_route_total &&
                     out.condition_near == out.p_near && out.far_is_k_minus_1;
  out.below_degree = out.pair_route_total < out.degree;
  return out;
}

SpecialPairSweep special_pair_sweep(long long k_min, long long k_max) {
  if (k_min < 3 || k_min > k_max) {
    throw UsageError("special_pair_sweep: need 3 <= k_min <= k_max, got [" +
                     std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
  }
  SpecialPairSweep sweep;
  sweep.k_min = k_min;
  sweep.k_max = k_max;
  sweep.all_routes_agree = true;
  for (long long k = k_min; k <= k_max; ++k) {
    sweep.entries.push_back(special_pair_check(k));
    const auto& entry = sweep.entries.back();
    if (!entry.routes_agree) sweep.all_routes_agree = false;
    if (entry.below_degree && !sweep.smallest_failing_k.has_value()) {
      sweep.smallest_failing_k = k;
    }
  }
  return sweep;
}

}  // namespace edgesum
