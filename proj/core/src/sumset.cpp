#include "edgesum/sumset.hpp"

#include "edgesum/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <thread>
#include <tuple>

namespace edgesum {

namespace {

void require_same_modulus(const char* who, long long ka, long long kb) {
  if (ka != kb) {
    throw UsageError(std::string(who) + ": modulus mismatch (" + std::to_string(ka) + " vs " +
                     std::to_string(kb) + ")");
  }
}

/// Left-rotation of a k-bit mask by s (0 <= s < k): the bitmask of X + s.
boost::dynamic_bitset<> rotate_bits(const boost::dynamic_bitset<>& bits, std::size_t s) {
  if (s == 0) return bits;
  return (bits << s) | (bits >> (bits.size() - s));
}

/// Visits every r-subset of {0, ..., n-1} in lexicographic order; stops when
/// fn returns false.  Returns false when stopped early.
bool for_each_combination(long long n, long long r,
                          const std::function<bool(const std::vector<long long>&)>& fn) {
  if (r < 0 || r > n) return true;
  std::vector<long long> idx(static_cast<std::size_t>(r));
  for (long long i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(idx)) return false;
    long long i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (long long j = i + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

ResidueSet set_from_mask(long long modulus, std::uint64_t mask) {
  ResidueSet out(modulus);
  for (long long x = 0; x < modulus; ++x) {
    if (mask >> x & 1) out.insert(x);
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform value in [0, bound) by rejection (no modulo bias).
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

void require_threads(int threads) {
  if (threads < 1) {
    throw UsageError("sumset audit: threads must be >= 1, got " + std::to_string(threads));
  }
}

/// Runs fn(worker) on `workers` threads (inline when workers == 1).
void run_workers(int workers, const std::function<void(int)>& fn) {
  if (workers == 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(fn, w);
  for (auto& t : pool) t.join();
}

/// Keyed first-failure tracker: keeps the description with the smallest key
/// so merged multi-thread results are deterministic.
template <typename Key>
struct FirstFailure {
  std::optional<Key> key;
  std::string description;

  void offer(Key candidate, std::string text) {
    if (!key.has_value() || candidate < *key) {
      key = std::move(candidate);
      description = std::move(text);
    }
  }
  void merge(const FirstFailure& other) {
    if (other.key.has_value()) offer(*other.key, other.description);
  }
};

using SetPairKey = std::tuple<long long, std::vector<long long>, std::vector<long long>>;
using SetPairTKey =
    std::tuple<long long, std::vector<long long>, std::vector<long long>, long long>;

}  // namespace

// ---------------------------------------------------------------------------
// ResidueSet

ResidueSet::ResidueSet(long long modulus) : k_(modulus) {
  if (modulus < 1) {
    throw UsageError("ResidueSet: modulus must be >= 1, got " + std::to_string(modulus));
  }
  bits_.resize(static_cast<std::size_t>(modulus));
}

ResidueSet::ResidueSet(long long modulus, std::initializer_list<long long> values)
    : ResidueSet(modulus) {
  for (long long v : values) insert(v);
}

ResidueSet::ResidueSet(long long modulus, const std::vector<long long>& values)
    : ResidueSet(modulus) {
  for (long long v : values) insert(v);
}

ResidueSet ResidueSet::universe(long long modulus) {
  ResidueSet out(modulus);
  out.bits_.set();
  return out;
}

long long ResidueSet::reduce(long long x) const {
  if (k_ < 1) throw UsageError("ResidueSet: operation on an uninitialized set (modulus 0)");
  return (x % k_ + k_) % k_;
}

long long ResidueSet::size() const { return static_cast<long long>(bits_.count()); }

bool ResidueSet::empty() const { return bits_.none(); }

bool ResidueSet::contains(long long x) const {
  return bits_.test(static_cast<std::size_t>(reduce(x)));
}

ResidueSet& ResidueSet::insert(long long x) {
  bits_.set(static_cast<std::size_t>(reduce(x)));
  return *this;
}

ResidueSet& ResidueSet::erase(long long x) {
  bits_.reset(static_cast<std::size_t>(reduce(x)));
  return *this;
}

std::vector<long long> ResidueSet::elements() const {
  std::vector<long long> out;
  out.reserve(bits_.count());
  for (std::size_t pos = bits_.find_first(); pos != boost::dynamic_bitset<>::npos;
       pos = bits_.find_next(pos)) {
    out.push_back(static_cast<long long>(pos));
  }
  return out;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  require_same_modulus("is_subset_of", k_, other.k_);
  return bits_.is_subset_of(other.bits_);
}

std::string ResidueSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (long long x : elements()) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  }
  out += "} mod " + std::to_string(k_);
  return out;
}

// ---------------------------------------------------------------------------
// Elementary operations

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus("sumset", a.modulus(), b.modulus());
  ResidueSet out(a.modulus());
  for (long long shift : b.elements()) {
    out.bits_ |= rotate_bits(a.bits_, static_cast<std::size_t>(shift));
  }
  return out;
}

ResidueSet translate(const ResidueSet& a, long long x) {
  ResidueSet out(a.modulus());
  out.bits_ = rotate_bits(a.bits_, static_cast<std::size_t>(a.reduce(x)));
  return out;
}

ResidueSet mod_project(const std::vector<long long>& values, long long modulus) {
  ResidueSet out(modulus);
  for (long long v : values) out.insert(v);
  return out;
}

ResidueSet multiplicity_sumset(const ResidueSet& a, const ResidueSet& b, long long i) {
  require_same_modulus("multiplicity_sumset", a.modulus(), b.modulus());
  if (i < 1) {
    throw UsageError("multiplicity_sumset: multiplicity must be >= 1, got " + std::to_string(i));
  }
  const long long k = a.modulus();
  std::vector<long long> counts(static_cast<std::size_t>(k), 0);
  for (long long x : a.elements()) {
    for (long long y : b.elements()) counts[static_cast<std::size_t>((x + y) % k)] += 1;
  }
  ResidueSet out(k);
  for (long long x = 0; x < k; ++x) {
    if (counts[static_cast<std::size_t>(x)] >= i) out.insert(x);
  }
  return out;
}

PairRelation make_pair_relation(long long modulus,
                                std::vector<std::pair<long long, long long>> pairs) {
  if (modulus < 1) {
    throw UsageError("make_pair_relation: modulus must be >= 1, got " + std::to_string(modulus));
  }
  for (auto& [x, y] : pairs) {
    x = (x % modulus + modulus) % modulus;
    y = (y % modulus + modulus) % modulus;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return PairRelation{modulus, std::move(pairs)};
}

PairRelation all_pairs(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus("all_pairs", a.modulus(), b.modulus());
  PairRelation out;
  out.modulus = a.modulus();
  out.pairs.reserve(static_cast<std::size_t>(a.size() * b.size()));
  for (long long x : a.elements()) {
    for (long long y : b.elements()) out.pairs.emplace_back(x, y);
  }
  return out;
}

ResidueSet restricted_sumset(const ResidueSet& a, const ResidueSet& b, const PairRelation& s) {
  require_same_modulus("restricted_sumset", a.modulus(), b.modulus());
  require_same_modulus("restricted_sumset", a.modulus(), s.modulus);
  ResidueSet out(a.modulus());
  for (const auto& [x, y] : s.pairs) {
    if (!a.contains(x) || !b.contains(y)) {
      throw UsageError("restricted_sumset: pair (" + std::to_string(x) + ", " +
                       std::to_string(y) + ") lies outside A x B");
    }
    out.insert(x + y);
  }
  return out;
}

ResidueSet stabilizer(const ResidueSet& x) {
  const long long k = x.modulus();
  ResidueSet out(k);
  for (long long y = 0; y < k; ++y) {
    if (translate(x, y) == x) out.insert(y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kneser

KneserAudit kneser_check(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus("kneser_check", a.modulus(), b.modulus());
  if (a.empty() || b.empty()) {
    throw UsageError("kneser_check: both sets must be nonempty (A = " + a.to_string() +
                     ", B = " + b.to_string() + ")");
  }
  const ResidueSet sum = sumset(a, b);
  const ResidueSet stab = stabilizer(sum);
  KneserAudit out;
  out.modulus = a.modulus();
  out.sum_size = sum.size();
  out.a_plus_stab = sumset(a, stab).size();
  out.b_plus_stab = sumset(b, stab).size();
  out.stab_size = stab.size();
  const long long bound = out.a_plus_stab + out.b_plus_stab - out.stab_size;
  out.holds = out.sum_size >= bound;
  out.equality = out.sum_size == bound;
  return out;
}

// ---------------------------------------------------------------------------
// Grynkiewicz

GrynkiewiczAudit grynkiewicz_audit(const ResidueSet& a, const ResidueSet& b, long long t,
                                   long long effort_cap) {
  require_same_modulus("grynkiewicz_audit", a.modulus(), b.modulus());
  const long long k = a.modulus();
  if (t < 1 || t > k) {
    throw UsageError("grynkiewicz_audit: t must lie in [1, " + std::to_string(k) + "], got " +
                     std::to_string(t));
  }
  if (effort_cap < 1) {
    throw UsageError("grynkiewicz_audit: effort_cap must be >= 1, got " +
                     std::to_string(effort_cap));
  }

  const auto ea = a.elements();
  const auto eb = b.elements();
  std::vector<long long> counts(static_cast<std::size_t>(k), 0);
  for (long long x : ea) {
    for (long long y : eb) counts[static_cast<std::size_t>((x + y) % k)] += 1;
  }

  GrynkiewiczAudit out;
  out.t = t;
  // sum_{i=1..t} |(A+B)_i| counts each residue once per multiplicity level
  // it reaches, i.e. min(count, t).
  for (long long c : counts) out.prefix_sum += std::min(c, t);
  out.prefix_bound = t * (a.size() + b.size()) - 2 * t * t + 1;
  out.prefix_inequality = out.prefix_sum >= out.prefix_bound;

  ResidueSet target(k);
  for (long long x = 0; x < k; ++x) {
    if (counts[static_cast<std::size_t>(x)] >= t) target.insert(x);
  }

  long long effort = 0;
  const long long na = static_cast<long long>(ea.size());
  const long long nb = static_cast<long long>(eb.size());
  for (long long removed = 0; removed <= t - 1; ++removed) {
    for (long long ra = 0; ra <= removed; ++ra) {
      const long long rb = removed - ra;
      if (ra > na || rb > nb) continue;
      for_each_combination(na, ra, [&](const std::vector<long long>& ca) {
        ResidueSet ap = a;
        for (long long i : ca) ap.erase(ea[static_cast<std::size_t>(i)]);
        for_each_combination(nb, rb, [&](const std::vector<long long>& cb) {
          if (++effort > effort_cap) {
            out.search_exhausted = false;
            return false;
          }
          ResidueSet bp = b;
          for (long long i : cb) bp.erase(eb[static_cast<std::size_t>(i)]);
          if (sumset(ap, bp) == target) {
            out.restricted_equality = true;
            out.restriction_witness = std::make_pair(std::move(ap), std::move(bp));
            return false;
          }
          return true;
        });
        return out.search_exhausted && !out.restricted_equality;
      });
      if (!out.search_exhausted || out.restricted_equality) break;
    }
    if (!out.search_exhausted || out.restricted_equality) break;
  }

  out.holds = out.prefix_inequality || out.restricted_equality;
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric-cover growth bound

std::optional<long long> symmetric_cover_gap(const ResidueSet& a) {
  const long long k = a.modulus();
  for (long long x = 0; x < k; ++x) {
    if (!a.contains(x) && !a.contains(-x)) return x;
  }
  return std::nullopt;
}

bool symmetric_cover(const ResidueSet& a) { return !symmetric_cover_gap(a).has_value(); }

std::vector<ResidueSet> symmetric_cover_sets(long long modulus) {
  if (modulus < 1) {
    throw UsageError("symmetric_cover_sets: modulus must be >= 1, got " +
                     std::to_string(modulus));
  }
  if (modulus > 25) {
    throw UsageError("symmetric_cover_sets: modulus " + std::to_string(modulus) +
                     " exceeds 25; the family has 3^floor((k-1)/2) members and would not fit");
  }
  // Forced elements: 0, and k/2 when k is even (both are their own negatives).
  // Each remaining pair {x, k-x} independently contributes one of three
  // states: x only, k-x only, or both.
  std::vector<long long> free_low;
  for (long long x = 1; 2 * x < modulus; ++x) free_low.push_back(x);
  const std::size_t m = free_low.size();

  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;

  std::vector<ResidueSet> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    ResidueSet s(modulus);
    s.insert(0);
    if (modulus % 2 == 0) s.insert(modulus / 2);
    std::size_t rest = code;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t state = rest % 3;
      rest /= 3;
      if (state == 0 || state == 2) s.insert(free_low[i]);
      if (state == 1 || state == 2) s.insert(modulus - free_low[i]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ResidueSet& x, const ResidueSet& y) {
    return x.elements() < y.elements();
  });
  return out;
}

GrowthAudit growth_check(const ResidueSet& a, const ResidueSet& b, const PairRelation& s,
                         const Rat& eps3, const Rat& eps4) {
  require_same_modulus("growth_check", a.modulus(), b.modulus());
  require_same_modulus("growth_check", a.modulus(), s.modulus);
  const long long k = a.modulus();

  for (const auto& [name, set] : {std::make_pair("A", &a), std::make_pair("B", &b)}) {
    if (const auto gap = symmetric_cover_gap(*set)) {
      const long long x = *gap;
      throw UsageError(std::string("growth_check: symmetric-cover hypothesis fails for ") +
                       name + " = " + set->to_string() + ": neither " + std::to_string(x) +
                       " nor " + std::to_string((k - x) % k) + " lies in the set");
    }
  }

  const Rat pair_floor = Rat(a.size() * b.size()) - eps3 * eps3 * Rat(k * k);
  if (Rat(s.size()) < pair_floor) {
    throw UsageError("growth_check: |S| = " + std::to_string(s.size()) +
                     " is below the required |A||B| - eps3^2 k^2 = " +
                     to_fraction_string(pair_floor));
  }

  const ResidueSet image = restricted_sumset(a, b, s);
  GrowthAudit out;
  out.restricted_size = image.size();
  out.threshold = (Rat(1, 2) + eps4) * Rat(k);
  out.holds = Rat(out.restricted_size) >= out.threshold;
  out.tie = Rat(out.restricted_size) == out.threshold;
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

SumsetSweep kneser_exhaustive_audit(long long k_max, int threads) {
  if (k_max < 1 || k_max > 16) {
    throw UsageError("kneser_exhaustive_audit: k_max must lie in [1, 16], got " +
                     std::to_string(k_max));
  }
  require_threads(threads);

  SumsetSweep sweep;
  FirstFailure<SetPairKey> failure;
  for (long long k = 1; k <= k_max; ++k) {
    const std::uint64_t mask_count = (1ULL << k) - 1;
    std::vector<SumsetSweep> partial(static_cast<std::size_t>(threads));
    std::vector<FirstFailure<SetPairKey>> partial_failure(static_cast<std::size_t>(threads));
    run_workers(threads, [&](int w) {
      auto& mine = partial[static_cast<std::size_t>(w)];
      auto& fail = partial_failure[static_cast<std::size_t>(w)];
      for (std::uint64_t am = 1 + static_cast<std::uint64_t>(w); am <= mask_count;
           am += static_cast<std::uint64_t>(threads)) {
        const ResidueSet a = set_from_mask(k, am);
        for (std::uint64_t bm = 1; bm <= mask_count; ++bm) {
          const ResidueSet b = set_from_mask(k, bm);
          const KneserAudit audit = kneser_check(a, b);
          mine.checks += 1;
          if (!audit.holds) {
            mine.failures += 1;
            fail.offer(SetPairKey{k, a.elements(), b.elements()},
                       "A = " + a.to_string() + ", B = " + b.to_string() +
                           ": |A+B| = " + std::to_string(audit.sum_size) + " < " +
                           std::to_string(audit.a_plus_stab + audit.b_plus_stab -
                                          audit.stab_size) +
                           " = |A+H| + |B+H| - |H|");
          }
        }
      }
    });
    for (int w = 0; w < threads; ++w) {
      sweep.checks += partial[static_cast<std::size_t>(w)].checks;
      sweep.failures += partial[static_cast<std::size_t>(w)].failures;
      failure.merge(partial_failure[static_cast<std::size_t>(w)]);
    }
  }
  if (failure.key.has_value()) sweep.first_failure = failure.description;
  return sweep;
}

SumsetSweep kneser_random_audit(long long modulus_max, long long trials, std::uint64_t seed,
                                int threads) {
  if (modulus_max < 1) {
    throw UsageError("kneser_random_audit: modulus_max must be >= 1, got " +
                     std::to_string(modulus_max));
  }
  if (trials < 1) {
    throw UsageError("kneser_random_audit: trials must be >= 1, got " + std::to_string(trials));
  }
  require_threads(threads);

  std::vector<SumsetSweep> partial(static_cast<std::size_t>(threads));
  std::vector<FirstFailure<long long>> partial_failure(static_cast<std::size_t>(threads));
  run_workers(threads, [&](int w) {
    auto& mine = partial[static_cast<std::size_t>(w)];
    auto& fail = partial_failure[static_cast<std::size_t>(w)];
    for (long long trial = w; trial < trials; trial += threads) {
      // Per-trial seeding keeps the audit independent of the thread count.
      std::mt19937_64 rng(
          splitmix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial)));
      const long long k =
          1 + static_cast<long long>(bounded_rand(rng, static_cast<std::uint64_t>(modulus_max)));
      ResidueSet sets[2] = {ResidueSet(k), ResidueSet(k)};
      for (auto& s : sets) {
        for (long long x = 0; x < k; ++x) {
          if (rng() & 1) s.insert(x);
        }
        if (s.empty()) {
          s.insert(static_cast<long long>(bounded_rand(rng, static_cast<std::uint64_t>(k))));
        }
      }
      const KneserAudit audit = kneser_check(sets[0], sets[1]);
      mine.checks += 1;
      if (!audit.holds) {
        mine.failures += 1;
        fail.offer(trial, "trial " + std::to_string(trial) + ": A = " + sets[0].to_string() +
                              ", B = " + sets[1].to_string() +
                              ": |A+B| = " + std::to_string(audit.sum_size) + " < " +
                              std::to_string(audit.a_plus_stab + audit.b_plus_stab -
                                             audit.stab_size) +
                              " = |A+H| + |B+H| - |H|");
      }
    }
  });

  SumsetSweep sweep;
  FirstFailure<long long> failure;
  for (int w = 0; w < threads; ++w) {
    sweep.checks += partial[static_cast<std::size_t>(w)].checks;
    sweep.failures += partial[static_cast<std::size_t>(w)].failures;
    failure.merge(partial_failure[static_cast<std::size_t>(w)]);
  }
  if (failure.key.has_value()) sweep.first_failure = failure.description;
  return sweep;
}

GrynkiewiczSweep grynkiewicz_exhaustive_audit(long long k_max, long long t_max, int threads) {
  if (k_max < 1 || k_max > 12) {
    throw UsageError("grynkiewicz_exhaustive_audit: k_max must lie in [1, 12], got " +
                     std::to_string(k_max));
  }
  if (t_max < 1) {
    throw UsageError("grynkiewicz_exhaustive_audit: t_max must be >= 1, got " +
                     std::to_string(t_max));
  }
  require_threads(threads);

  GrynkiewiczSweep sweep;
  FirstFailure<SetPairTKey> failure;
  for (long long k = 1; k <= k_max; ++k) {
    const std::uint64_t mask_count = (1ULL << k) - 1;
    const long long t_top = std::min(t_max, k);
    std::vector<GrynkiewiczSweep> partial(static_cast<std::size_t>(threads));
    std::vector<FirstFailure<SetPairTKey>> partial_failure(static_cast<std::size_t>(threads));
    run_workers(threads, [&](int w) {
      auto& mine = partial[static_cast<std::size_t>(w)];
      auto& fail = partial_failure[static_cast<std::size_t>(w)];
      for (std::uint64_t am = 1 + static_cast<std::uint64_t>(w); am <= mask_count;
           am += static_cast<std::uint64_t>(threads)) {
        const ResidueSet a = set_from_mask(k, am);
        for (std::uint64_t bm = 1; bm <= mask_count; ++bm) {
          const ResidueSet b = set_from_mask(k, bm);
          for (long long t = 1; t <= t_top; ++t) {
            const GrynkiewiczAudit audit = grynkiewicz_audit(a, b, t);
            mine.checks += 1;
            if (!audit.search_exhausted) mine.incomplete_searches += 1;
            if (audit.prefix_inequality && audit.restricted_equality) {
              mine.both_branches += 1;
            } else if (audit.prefix_inequality) {
              mine.prefix_only += 1;
            } else if (audit.restricted_equality) {
              mine.restriction_only += 1;
            }
            if (!audit.holds) {
              mine.failures += 1;
              fail.offer(SetPairTKey{k, a.elements(), b.elements(), t},
                         "A = " + a.to_string() + ", B = " + b.to_string() +
                             ", t = " + std::to_string(t) + ": prefix sum " +
                             std::to_string(audit.prefix_sum) + " < " +
                             std::to_string(audit.prefix_bound) +
                             " and no restricted witness within " + std::to_string(t - 1) +
                             " removals");
            }
          }
        }
      }
    });
    for (int w = 0; w < threads; ++w) {
      const auto& mine = partial[static_cast<std::size_t>(w)];
      sweep.checks += mine.checks;
      sweep.failures += mine.failures;
      sweep.prefix_only += mine.prefix_only;
      sweep.restriction_only += mine.restriction_only;
      sweep.both_branches += mine.both_branches;
      sweep.incomplete_searches += mine.incomplete_searches;
      failure.merge(partial_failure[static_cast<std::size_t>(w)]);
    }
  }
  if (failure.key.has_value()) sweep.first_failure = failure.description;
  return sweep;
}

GrowthSweep exhaustive_growth_audit(long long k_max, const Rat& eps3, const Rat& eps4,
                                    int threads) {
  if (k_max < 1 || k_max > 25) {
    throw UsageError("exhaustive_growth_audit: k_max must lie in [1, 25], got " +
                     std::to_string(k_max));
  }
  require_threads(threads);

  GrowthSweep sweep;
  sweep.k_max = k_max;
  sweep.eps3 = eps3;
  sweep.eps4 = eps4;
  FirstFailure<SetPairKey> failure;
  for (long long k = 1; k <= k_max; ++k) {
    const auto sets = symmetric_cover_sets(k);
    for (const auto& s : sets) {
      if (2 * s.size() < k) {
        throw Error("exhaustive_growth_audit: enumerated set " + s.to_string() +
                    " breaks the forced-size bound |A| >= ceil(k/2)");
      }
    }
    std::vector<GrowthSweep> partial(static_cast<std::size_t>(threads));
    std::vector<FirstFailure<SetPairKey>> partial_failure(static_cast<std::size_t>(threads));
    run_workers(threads, [&](int w) {
      auto& mine = partial[static_cast<std::size_t>(w)];
      auto& fail = partial_failure[static_cast<std::size_t>(w)];
      for (std::size_t ai = static_cast<std::size_t>(w); ai < sets.size();
           ai += static_cast<std::size_t>(threads)) {
        const ResidueSet& a = sets[ai];
        for (const ResidueSet& b : sets) {
          const GrowthAudit audit = growth_check(a, b, all_pairs(a, b), eps3, eps4);
          mine.pairs_tested += 1;
          if (audit.tie) mine.ties += 1;
          if (!audit.holds) {
            mine.failures += 1;
            fail.offer(SetPairKey{k, a.elements(), b.elements()},
                       "A = " + a.to_string() + ", B = " + b.to_string() + ": |A+B| = " +
                           std::to_string(audit.restricted_size) + " < threshold " +
                           to_fraction_string(audit.threshold));
          }
        }
      }
    });
    for (int w = 0; w < threads; ++w) {
      sweep.pairs_tested += partial[static_cast<std::size_t>(w)].pairs_tested;
      sweep.failures += partial[static_cast<std::size_t>(w)].failures;
      sweep.ties += partial[static_cast<std::size_t>(w)].ties;
      failure.merge(partial_failure[static_cast<std::size_t>(w)]);
    }
  }
  if (failure.key.has_value()) sweep.first_failure = failure.description;
  return sweep;
}

}  // namespace edgesum
