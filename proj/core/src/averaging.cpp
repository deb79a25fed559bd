#include "edgesum/averaging.hpp"

#include "edgesum/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace edgesum {

namespace {

void check_sizes(const Assignment& f, const UniformHypergraph& h, const char* who) {
  if (static_cast<long long>(f.size()) != h.n) {
    throw UsageError(std::string(who) + ": assignment on " + std::to_string(f.size()) +
                     " vertices but host has n=" + std::to_string(h.n));
  }
}

/// Values scaled by the common denominator so edge sums run in int64 with
/// the same signs.  `ok == false` when the scale or the sums would not fit.
struct ScaledValues {
  bool ok = false;
  std::vector<long long> w;
};

ScaledValues scale_to_int64(const Assignment& f) {
  BigInt lcm_den = 1;
  for (const Rat& x : f) lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(x)));
  ScaledValues out;
  BigInt abs_sum = 0;
  for (const Rat& x : f) {
    const BigInt scaled = BigInt(numerator(x)) * (lcm_den / BigInt(denominator(x)));
    abs_sum += abs(scaled);
    out.w.push_back(0);
    if (scaled < std::numeric_limits<long long>::min() ||
        scaled > std::numeric_limits<long long>::max()) {
      return out;  // ok stays false
    }
    out.w.back() = static_cast<long long>(scaled);
  }
  // Any signed partial sum of edge values is bounded by the absolute sum.
  if (abs_sum > std::numeric_limits<long long>::max() / 4) return out;
  out.ok = true;
  return out;
}

long long count_nonneg_permuted_int(const std::vector<long long>& w,
                                    const std::vector<std::vector<std::size_t>>& edges) {
  long long count = 0;
  for (const auto& e : edges) {
    long long sum = 0;
    for (std::size_t v : e) sum += w[v];
    if (sum >= 0) ++count;
  }
  return count;
}

long long count_nonneg_arrangement_rat(const std::vector<Rat>& values,
                                       const std::vector<std::vector<std::size_t>>& edges) {
  long long count = 0;
  for (const auto& e : edges) {
    Rat sum = 0;
    for (std::size_t v : e) sum += values[v];
    if (sum >= 0) ++count;
  }
  return count;
}

std::vector<std::vector<std::size_t>> edge_index_lists(const UniformHypergraph& h) {
  std::vector<std::vector<std::size_t>> out;
  h.for_each_edge([&](const KEdge& e) {
    std::vector<std::size_t> idx;
    idx.reserve(e.vertices.size());
    for (long long v : e.vertices) idx.push_back(static_cast<std::size_t>(v));
    out.push_back(std::move(idx));
  });
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform draw from [0, bound) by rejection; no modulo bias.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

struct BlockSums {
  long long count_sum = 0;
  long long square_sum = 0;
};

}  // namespace

Rat permutation_expectation_exact(const Assignment& f, const UniformHypergraph& h) {
  check_sizes(f, h, "permutation_expectation_exact");
  if (h.n > 8) {
    throw UsageError("permutation_expectation_exact: n=" + std::to_string(h.n) +
                     " has too many arrangements; use the Monte Carlo estimator");
  }
  const auto edges = edge_index_lists(h);

  BigInt total = 0;
  long long arrangements = 0;
  const ScaledValues scaled = scale_to_int64(f);
  if (scaled.ok) {
    std::vector<long long> values = scaled.w;
    std::sort(values.begin(), values.end());
    do {
      total += count_nonneg_permuted_int(values, edges);
      ++arrangements;
    } while (std::next_permutation(values.begin(), values.end()));
  } else {
    std::vector<Rat> values = f;
    std::sort(values.begin(), values.end());
    do {
      total += count_nonneg_arrangement_rat(values, edges);
      ++arrangements;
    } while (std::next_permutation(values.begin(), values.end()));
  }
  return Rat(total) / arrangements;
}

Rat permutation_expectation_formula(const Assignment& f, const UniformHypergraph& h) {
  check_sizes(f, h, "permutation_expectation_formula");
  const long long d = regular_degree(h);
  if (d < 0) {
    throw UsageError("permutation_expectation_formula: host is not regular (" +
                     degree_profile_summary(h) + ")");
  }
  const UniformHypergraph complete = build_complete(h.n, h.k);
  const BigInt eplus = count_nonnegative(f, complete).nonnegative_count;
  return Rat(eplus * d) / Rat(binomial(h.n - 1, h.k - 1));
}

McExpectation permutation_expectation_mc(const Assignment& f, const UniformHypergraph& h,
                                         long long samples, std::uint64_t seed, int threads) {
  check_sizes(f, h, "permutation_expectation_mc");
  if (samples < 1) {
    throw UsageError("permutation_expectation_mc: samples must be >= 1, got " +
                     std::to_string(samples));
  }
  if (threads < 1) {
    throw UsageError("permutation_expectation_mc: threads must be >= 1, got " +
                     std::to_string(threads));
  }
  const auto edges = edge_index_lists(h);
  const std::size_t n = f.size();
  const ScaledValues scaled = scale_to_int64(f);

  constexpr long long kBlock = 4096;
  const long long blocks = (samples + kBlock - 1) / kBlock;
  std::vector<BlockSums> sums(static_cast<std::size_t>(blocks));

  const auto run_block = [&](long long b) {
    const long long begin = b * kBlock;
    const long long end = std::min(samples, begin + kBlock);
    std::mt19937_64 rng(splitmix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(b)));
    std::vector<std::size_t> perm(n);
    std::vector<long long> permuted_int(n);
    std::vector<Rat> permuted_rat(scaled.ok ? 0 : n);
    BlockSums& out = sums[static_cast<std::size_t>(b)];
    for (long long s = begin; s < end; ++s) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(bounded_rand(rng, i + 1));
        std::swap(perm[i], perm[j]);
      }
      long long count = 0;
      if (scaled.ok) {
        for (std::size_t v = 0; v < n; ++v) permuted_int[v] = scaled.w[perm[v]];
        count = count_nonneg_permuted_int(permuted_int, edges);
      } else {
        for (std::size_t v = 0; v < n; ++v) permuted_rat[v] = f[perm[v]];
        count = count_nonneg_arrangement_rat(permuted_rat, edges);
      }
      out.count_sum += count;
      out.square_sum += count * count;
    }
  };

  if (threads == 1 || blocks == 1) {
    for (long long b = 0; b < blocks; ++b) run_block(b);
  } else {
    const long long workers = std::min<long long>(threads, blocks);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (long long b = w; b < blocks; b += workers) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  BigInt count_sum = 0;
  BigInt square_sum = 0;
  for (const BlockSums& b : sums) {
    count_sum += b.count_sum;
    square_sum += b.square_sum;
  }

  McExpectation out;
  out.samples = samples;
  out.seed = seed;
  out.estimate = Rat(count_sum) / samples;
  if (samples >= 2) {
    const Rat centered = Rat(square_sum) - Rat(count_sum * count_sum) / samples;
    out.se_squared = centered / (Rat(samples - 1) * samples);
  } else {
    out.se_squared = 0;
  }
  return out;
}

bool within_standard_errors(const Rat& estimate, const Rat& reference, const Rat& se_squared,
                            long long spread) {
  const Rat diff = estimate - reference;
  if (se_squared == 0) return diff == 0;
  return diff * diff <= se_squared * spread * spread;
}

BigInt averaging_lower_bound(const UniformHypergraph& h, long long certified_min) {
  if (certified_min < 0) {
    throw UsageError("averaging_lower_bound: certified_min must be >= 0, got " +
                     std::to_string(certified_min));
  }
  const long long d = regular_degree(h);
  if (d < 0) {
    throw UsageError("averaging_lower_bound: host is not regular (" + degree_profile_summary(h) +
                     ")");
  }
  return rat_ceil(Rat(BigInt(certified_min) * binomial(h.n - 1, h.k - 1), BigInt(d)));
}

}  // namespace edgesum
