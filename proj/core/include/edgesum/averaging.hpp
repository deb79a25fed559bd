#pragma once

// The averaging identity: redistribute an assignment's values over the
// vertices uniformly at random and count nonnegative edges.  For a d-regular
// k-uniform host on n vertices the expectation equals
// e+_f(K_n^(k)) * d / C(n-1, k-1), which turns a per-host minimum into a
// lower bound for the complete hypergraph.  Exact enumeration for small n,
// a seeded Monte Carlo estimator beyond that.

#include <cstdint>

#include "edgesum/assignment.hpp"
#include "edgesum/hypergraph.hpp"
#include "edgesum/rational.hpp"

namespace edgesum {

/// Exact expectation of the nonnegative-edge count over a uniformly random
/// redistribution of f's values.  Enumerates each distinct value
/// arrangement once (repeated values collapse by multiset symmetry, so the
/// reach is better than raw factorials when f has small support).
/// Refuses n > 8; use the Monte Carlo estimator there.
Rat permutation_expectation_exact(const Assignment& f, const UniformHypergraph& h);

/// Closed form e+_f(K_n^(k)) * d / C(n-1, k-1) for a d-regular host;
/// equals the exact expectation identically.  Refuses non-regular hosts
/// with the degree profile in the message.
Rat permutation_expectation_formula(const Assignment& f, const UniformHypergraph& h);

/// Monte Carlo estimate of the same expectation.
struct McExpectation {
  Rat estimate;    ///< exact mean of the sampled counts
  Rat se_squared;  ///< exact squared standard error of that mean
  long long samples = 0;
  std::uint64_t seed = 0;
};

/// Unbiased, deterministic given (samples, seed): sampling runs in 4096-
/// sample blocks with per-block derived seeds, so the result is identical
/// for every thread count.  Counts merge by exact addition.
McExpectation permutation_expectation_mc(const Assignment& f, const UniformHypergraph& h,
                                         long long samples, std::uint64_t seed, int threads = 1);

/// Exact check |estimate - reference| <= spread * standard_error, evaluated
/// on squares so no square root is needed.  Zero variance demands equality.
bool within_standard_errors(const Rat& estimate, const Rat& reference, const Rat& se_squared,
                            long long spread);

/// The bound the averaging identity yields for the complete hypergraph:
/// when every assignment with nonnegative total gives at least
/// `certified_min` nonnegative edges on the d-regular host h, then
/// e+(K_n^(k)) >= ceil(certified_min * C(n-1, k-1) / d).  The caller owns
/// the certification (e.g. an exact Holds verdict with minimum >= d).
BigInt averaging_lower_bound(const UniformHypergraph& h, long long certified_min);

}  // namespace edgesum
