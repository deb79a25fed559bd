#include "edgesum/assignment.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "edgesum/errors.hpp"
#include "edgesum/family_catalog.hpp"

namespace edgesum {

Rat total_sum(const Assignment& f) {
  Rat total = 0;
  for (const auto& value : f) total += value;
  return total;
}

Rat edge_sum(const Assignment& f, const std::vector<long long>& vertices) {
  Rat total = 0;
  for (long long v : vertices) {
    if (v < 0 || v >= static_cast<long long>(f.size())) {
      throw UsageError("edge_sum: vertex " + std::to_string(v) + " outside assignment on " +
                       std::to_string(f.size()) + " vertices");
    }
    total += f[static_cast<std::size_t>(v)];
  }
  return total;
}

Rat edge_sum(const Assignment& f, const KEdge& edge) { return edge_sum(f, edge.vertices); }

Rat interval_sum(const Assignment& f, const ClockwiseInterval& interval) {
  const long long n = static_cast<long long>(f.size());
  if (interval.modulus != n) {
    throw UsageError("interval_sum: interval lives in Z_" + std::to_string(interval.modulus) +
                     " but the assignment has " + std::to_string(n) + " vertices");
  }
  Rat total = 0;
  for (long long t = 0; t < interval.length; ++t) {
    total += f[static_cast<std::size_t>(normalize_mod(interval.start + t, n))];
  }
  return total;
}

NonnegativityReport count_nonnegative(const Assignment& f, const UniformHypergraph& h,
                                      bool collect) {
  if (static_cast<long long>(f.size()) != h.n) {
    throw UsageError("count_nonnegative: assignment on " + std::to_string(f.size()) +
                     " vertices against a host on " + std::to_string(h.n));
  }
  NonnegativityReport report;
  report.threshold = min_degree(h);
  if (collect) report.nonnegative_edges.emplace();
  long long nonnegative = 0, negative = 0;
  h.for_each_edge([&](const KEdge& edge) {
    if (edge_sum(f, edge) >= 0) {
      ++nonnegative;
      if (collect) report.nonnegative_edges->push_back(edge);
    } else {
      ++negative;
    }
  });
  report.nonnegative_count = nonnegative;
  report.negative_count = negative;
  return report;
}

const std::vector<std::string>& example_assignment_kinds() {
  static const std::vector<std::string> kinds = {"star", "three_heavy", "tight_cycle_k3", "h5k_mod"};
  return kinds;
}

Assignment example_assignment(const std::string& kind, long long n, long long k) {
  if (n < 1) throw UsageError("example_assignment: n must be positive");
  Assignment f(static_cast<std::size_t>(n));
  if (kind == "star") {
    std::fill(f.begin(), f.end(), Rat(-1));
    f[0] = n - 1;
    return f;
  }
  if (kind == "three_heavy") {
    if (n != 3 * k + 1) {
      throw UsageError("example_assignment: three_heavy requires n = 3k+1 (k=" + std::to_string(k) +
                       " wants n=" + std::to_string(3 * k + 1) + ", got " + std::to_string(n) + ")");
    }
    std::fill(f.begin(), f.end(), Rat(3));
    f[0] = f[1] = f[2] = 2 - 3 * k;
    return f;
  }
  if (kind == "tight_cycle_k3") {
    if (k != 3) throw UsageError("example_assignment: tight_cycle_k3 requires k = 3");
    if (n % 3 != 1) throw UsageError("example_assignment: tight_cycle_k3 requires n = 1 mod 3");
    if (n > 151) {
      throw UsageError("example_assignment: tight_cycle_k3 requires n <= 151 to keep the total "
                       "nonnegative (50n >= 101(n-1)/3 + 50(n - (n-1)/3) fails beyond that)");
    }
    for (long long v = 0; v < n; ++v) {
      f[static_cast<std::size_t>(v)] = (v != 0 && v % 3 == 0) ? Rat(-101) : Rat(50);
    }
    return f;
  }
  if (kind == "h5k_mod") {
    if (k < 2 || n != 5 * (k - 1)) {
      throw UsageError("example_assignment: h5k_mod requires n = 5(k-1) with k >= 2 (k=" +
                       std::to_string(k) + ", got n=" + std::to_string(n) + ")");
    }
    for (long long v = 0; v < n; ++v) {
      f[static_cast<std::size_t>(v)] = (v % (k - 1) == 0) ? Rat(k - 2) : Rat(-1);
    }
    return f;
  }
  throw UsageError("example_assignment: unknown kind \"" + kind +
                   "\" (known: star, three_heavy, tight_cycle_k3, h5k_mod)");
}

Assignment random_nonnegative_assignment(long long n, std::uint64_t seed) {
  if (n < 1) throw UsageError("random_nonnegative_assignment: n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-24, 24);
  const int denominators[] = {1, 2, 3, 4, 5, 7};
  std::uniform_int_distribution<int> denominator_index(0, 5);
  Assignment f;
  f.reserve(static_cast<std::size_t>(n));
  for (long long v = 0; v < n; ++v) {
    f.push_back(Rat(numerator(rng)) / denominators[denominator_index(rng)]);
  }
  const Rat total = total_sum(f);
  if (total < 0) f[0] -= total;
  return f;
}

Assignment parse_assignment_text(const std::string& text) {
  Assignment f;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      throw UsageError("assignment line " + std::to_string(line_no) + " is blank");
    }
    const auto end = line.find_last_not_of(" \t\r");
    try {
      f.push_back(parse_fraction(line.substr(begin, end - begin + 1)));
    } catch (const Error& e) {
      throw UsageError("assignment line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (f.empty()) throw UsageError("assignment text contains no values");
  return f;
}

GoodBadPartition good_bad_partition(const Assignment& f, long long k, const Rat& eps0) {
  const long long n = static_cast<long long>(f.size());
  if (k < 2) throw UsageError("good_bad_partition: k must be >= 2");
  if (n < 12 * k) {
    throw UsageError("good_bad_partition: needs n >= 12k for the vertex families, got n=" +
                     std::to_string(n) + ", k=" + std::to_string(k));
  }
  GoodBadPartition result;
  result.threshold = to_i64_checked(rat_ceil(eps0 * k * k), "good_bad_partition threshold");
  for (long long v = 0; v < n; ++v) {
    long long nonnegative = 0;
    for (const auto& edge : vertex_family(v, k, n)) {
      if (edge_sum(f, edge) >= 0) ++nonnegative;
    }
    (nonnegative >= result.threshold ? result.bad : result.good).push_back(v);
  }
  return result;
}

namespace {

long long position_in(const ClockwiseInterval& I, long long v) {
  if (!interval_contains(I, v)) {
    throw UsageError("reach set: base vertex " + std::to_string(v) + " lies outside the interval");
  }
  return normalize_mod(v - I.start, I.modulus);
}

}  // namespace

std::vector<long long> r_set(const Assignment& f, const ClockwiseInterval& I, long long v,
                             const std::vector<long long>& good) {
  const long long n = static_cast<long long>(f.size());
  if (I.modulus != n) throw UsageError("r_set: interval modulus differs from assignment size");
  const std::set<long long> good_set(good.begin(), good.end());
  const long long base = position_in(I, v);
  std::vector<long long> reach;
  Rat running = 0;  // f([v, u-1]) as u advances
  for (long long p = base + 1; p < I.length; ++p) {
    const long long u = normalize_mod(I.start + p, n);
    running += f[static_cast<std::size_t>(normalize_mod(I.start + p - 1, n))];
    if (running < 0 && good_set.count(u)) reach.push_back(u);
  }
  return reach;
}

std::vector<long long> r_minus_set(const Assignment& f, const ClockwiseInterval& I, long long v,
                                   const std::vector<long long>& good) {
  const long long n = static_cast<long long>(f.size());
  if (I.modulus != n) throw UsageError("r_minus_set: interval modulus differs from assignment size");
  const std::set<long long> good_set(good.begin(), good.end());
  const long long base = position_in(I, v);
  std::vector<long long> reach;
  Rat running = 0;  // f([u+1, v]) as u walks back
  for (long long p = base - 1; p >= 0; --p) {
    const long long u = normalize_mod(I.start + p, n);
    running += f[static_cast<std::size_t>(normalize_mod(I.start + p + 1, n))];
    if (running < 0 && good_set.count(u)) reach.push_back(u);
  }
  std::reverse(reach.begin(), reach.end());  // report in clockwise order
  return reach;
}

QSets q_sets(const Assignment& f, long long k, long long v, const Rat& eps) {
  const long long n = static_cast<long long>(f.size());
  if (k < 2) throw UsageError("q_sets: k must be >= 2");
  if (eps <= 0 || eps > 1) throw UsageError("q_sets: eps must lie in (0, 1]");
  QSets result;
  result.threshold = to_i64_checked(rat_ceil(eps * k), "q_sets threshold");
  result.impossible = result.threshold > k - 1;
  std::set<long long> full;
  // sums[i] grows with j: after step j it holds f([v+i, v+i+j-1]).
  std::vector<Rat> sums(static_cast<std::size_t>(k), Rat(0));
  for (long long j = 1; j <= k - 1; ++j) {
    long long negatives = 0, nonnegatives = 0;
    for (long long i = 1; i <= k - 1; ++i) {
      sums[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(normalize_mod(v + i + j - 1, n))];
      if (sums[static_cast<std::size_t>(i)] < 0) {
        ++negatives;
      } else {
        ++nonnegatives;
      }
    }
    if (negatives >= result.threshold) {
      result.q_plus.push_back(j);
      full.insert(j);
    }
    if (nonnegatives >= result.threshold) {
      result.q_minus.push_back(k - j);
      full.insert(k - j);
    }
  }
  std::sort(result.q_minus.begin(), result.q_minus.end());
  full.insert(0);
  result.q_full.assign(full.begin(), full.end());
  return result;
}

std::optional<NegativeCover> find_negative_cover(const Assignment& f, long long k,
                                                 const ClockwiseInterval& I) {
  const long long n = static_cast<long long>(f.size());
  if (k < 2) throw UsageError("find_negative_cover: k must be >= 2");
  if (I.modulus != n) {
    throw UsageError("find_negative_cover: interval modulus differs from assignment size");
  }
  if (I.length > n - 2 * k) {
    throw UsageError("find_negative_cover: needs |I| <= n - 2k, got |I|=" + std::to_string(I.length) +
                     ", n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  for (long long offset = 0; offset < 2 * k; ++offset) {
    const long long blocks = (offset + I.length + 2 * k - 1) / (2 * k);
    if (2 * k * blocks > I.length + 2 * k) continue;  // J would overshoot |I| + 2k
    const long long anchor = normalize_mod(I.start - offset, n);
    for (long long i = 1; i <= k - 1; ++i) {
      for (long long j = 1; j <= k - 1; ++j) {
        std::vector<KEdge> chain;
        std::vector<Rat> sums;
        bool all_negative = true;
        for (long long t = 0; t < blocks && all_negative; ++t) {
          const long long block_start = anchor + 2 * t * k;
          for (const auto& edge : {double_interval_edge(block_start, i, j, k, n),
                                   double_interval_edge(block_start + i, j, k - i, k, n)}) {
            const Rat sum = edge_sum(f, edge);
            if (sum >= 0) {
              all_negative = false;
              break;
            }
            chain.push_back(edge);
            sums.push_back(sum);
          }
        }
        if (!all_negative) continue;
        NegativeCover cover;
        cover.anchor = anchor;
        cover.offset = offset;
        cover.i = i;
        cover.j = j;
        cover.blocks = blocks;
        cover.covered = interval_from_length(anchor, 2 * k * blocks, n);
        cover.chain = std::move(chain);
        cover.chain_sums = std::move(sums);
        return cover;
      }
    }
  }
  return std::nullopt;
}

}  // namespace edgesum
