#include "edgesum/cyclic.hpp"

#include "edgesum/errors.hpp"

#include <algorithm>
#include <string>

namespace edgesum {

long long normalize_mod(long long x, long long n) {
  if (n <= 0) throw UsageError("modulus must be positive, got " + std::to_string(n));
  long long r = x % n;
  if (r < 0) r += n;
  return r;
}

CyclicIndex cyclic_index(long long value, long long modulus) {
  return CyclicIndex{normalize_mod(value, modulus), modulus};
}

ClockwiseInterval closed_interval(long long a, long long b, long long n) {
  const long long start = normalize_mod(a, n);
  const long long length = normalize_mod(b - a, n) + 1;
  return ClockwiseInterval{start, length, n};
}

ClockwiseInterval interval_from_length(long long start, long long length, long long n) {
  if (length < 0 || length > n) {
    throw UsageError("interval length " + std::to_string(length) + " out of [0, " + std::to_string(n) + "]");
  }
  return ClockwiseInterval{normalize_mod(start, n), length, n};
}

ClockwiseInterval empty_interval(long long n) { return interval_from_length(0, 0, n); }

std::vector<long long> interval_elements(const ClockwiseInterval& interval) {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(interval.length));
  for (long long t = 0; t < interval.length; ++t) {
    out.push_back(normalize_mod(interval.start + t, interval.modulus));
  }
  return out;
}

bool interval_contains(const ClockwiseInterval& interval, long long x) {
  if (interval.length == 0) return false;
  const long long offset = normalize_mod(x - interval.start, interval.modulus);
  return offset < interval.length;
}

long long interval_last(const ClockwiseInterval& interval) {
  if (interval.length == 0) throw UsageError("interval_last: empty interval has no last element");
  return normalize_mod(interval.start + interval.length - 1, interval.modulus);
}

KEdge make_kedge(std::vector<long long> vertices, long long n) {
  for (auto& v : vertices) v = normalize_mod(v, n);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return KEdge{std::move(vertices)};
}

std::vector<ClockwiseInterval> double_interval_arcs(const DoubleIntervalSpec& spec) {
  if (spec.i < 0 || spec.k - spec.i < 0) {
    throw UsageError("double_interval_arcs: arc lengths i=" + std::to_string(spec.i) + ", k-i=" +
                     std::to_string(spec.k - spec.i) + " must be >= 0");
  }
  return {
      interval_from_length(spec.v, spec.i, spec.n),
      interval_from_length(spec.v + spec.i + spec.j, spec.k - spec.i, spec.n),
  };
}

KEdge double_interval_edge(const DoubleIntervalSpec& spec) {
  std::vector<long long> vertices;
  vertices.reserve(static_cast<std::size_t>(spec.k > 0 ? spec.k : 0));
  for (const auto& arc : double_interval_arcs(spec)) {
    for (long long t = 0; t < arc.length; ++t) {
      vertices.push_back(arc.start + t);
    }
  }
  return make_kedge(std::move(vertices), spec.n);
}

KEdge double_interval_edge(long long v, long long i, long long j, long long k, long long n) {
  return double_interval_edge(DoubleIntervalSpec{v, i, j, k, n});
}

}  // namespace edgesum
