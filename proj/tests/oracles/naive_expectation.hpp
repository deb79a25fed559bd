#pragma once

// Independent exact permutation expectation: averages the nonnegative-edge
// count over ALL n! vertex permutations (no multiset shortcuts), exact
// rational arithmetic.  Only usable for small n; that is the point.

#include <edgesum/rational.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using edgesum::Rat;

inline Rat permutation_expectation(const std::vector<Rat>& values,
                                   const std::vector<std::vector<long long>>& edges) {
  const std::size_t n = values.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rat total = 0;
  long long count = 0;
  do {
    long long nonneg = 0;
    for (const auto& e : edges) {
      Rat sum = 0;
      for (long long v : e) sum += values[perm[static_cast<std::size_t>(v)]];
      if (sum >= 0) ++nonneg;
    }
    total += nonneg;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / count;
}

}  // namespace oracle
