#pragma once

// Additive combinatorics over Z_k: residue sets with exact cardinality,
// sumsets, translates, integer projection, multiplicity and restricted
// sumsets, stabilizers, and audit drivers for the classical sumset
// inequalities (Kneser, Grynkiewicz) plus the symmetric-cover growth bound.

#include "edgesum/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgesum {

/// Subset of Z_k backed by a bitmask (one machine word for k <= 64, chunked
/// blocks beyond).  Values passed in are reduced modulo k, so negative
/// representatives are accepted everywhere.
class ResidueSet {
 public:
  /// Uninitialized set (modulus 0); every operation on it throws.  Exists so
  /// the type is usable inside std::optional and containers.
  ResidueSet() = default;

  /// Empty subset of Z_modulus.  Throws UsageError when modulus < 1.
  explicit ResidueSet(long long modulus);
  ResidueSet(long long modulus, std::initializer_list<long long> values);
  ResidueSet(long long modulus, const std::vector<long long>& values);

  /// All of Z_modulus.
  static ResidueSet universe(long long modulus);

  long long modulus() const { return k_; }
  long long size() const;
  bool empty() const;
  bool contains(long long x) const;
  ResidueSet& insert(long long x);
  ResidueSet& erase(long long x);

  /// Elements in ascending order.
  std::vector<long long> elements() const;

  /// Subset test; throws UsageError when the moduli differ.
  bool is_subset_of(const ResidueSet& other) const;

  /// "{0, 2, 5} mod 7" — for error messages and audit records.
  std::string to_string() const;

  friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
    return a.k_ == b.k_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const ResidueSet& a, const ResidueSet& b) { return !(a == b); }

  friend ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);
  friend ResidueSet translate(const ResidueSet& a, long long x);

 private:
  long long reduce(long long x) const;

  long long k_ = 0;
  boost::dynamic_bitset<> bits_;
};

/// A + B = {a + b : a in A, b in B}.  Throws UsageError on modulus mismatch.
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);

/// A + x = {a + x : a in A}.
ResidueSet translate(const ResidueSet& a, long long x);

/// Image of a list of arbitrary integers under reduction mod `modulus`.
ResidueSet mod_project(const std::vector<long long>& values, long long modulus);

/// (A + B)_i: residues representable as a + b by at least i distinct pairs
/// (a, b) in A x B.  Nested: (A+B)_{i+1} is a subset of (A+B)_i.  Throws
/// UsageError when i < 1 or the moduli differ.
ResidueSet multiplicity_sumset(const ResidueSet& a, const ResidueSet& b, long long i);

/// Explicit pair relation S inside A x B (distinct, lexicographically sorted
/// pairs of residues).
struct PairRelation {
  long long modulus = 0;
  std::vector<std::pair<long long, long long>> pairs;

  long long size() const { return static_cast<long long>(pairs.size()); }
};

/// Reduces each component mod `modulus`, sorts, and removes duplicates.
PairRelation make_pair_relation(long long modulus,
                                std::vector<std::pair<long long, long long>> pairs);

/// The full relation A x B.
PairRelation all_pairs(const ResidueSet& a, const ResidueSet& b);

/// A +_S B = {a + b : (a, b) in S}.  Throws UsageError when some pair of S
/// lies outside A x B (identifying the stray pair) or the moduli differ.
ResidueSet restricted_sumset(const ResidueSet& a, const ResidueSet& b, const PairRelation& s);

/// Stab(X) = {y : y + X = X}; always a subgroup of Z_k containing 0, and
/// X + Stab(X) = X.  The stabilizer of the empty set is all of Z_k.
ResidueSet stabilizer(const ResidueSet& x);

/// One Kneser-inequality instance: with H = Stab(A+B), checks
/// |A+B| >= |A+H| + |B+H| - |H|.
struct KneserAudit {
  long long modulus = 0;
  long long sum_size = 0;     // |A+B|
  long long a_plus_stab = 0;  // |A+H|
  long long b_plus_stab = 0;  // |B+H|
  long long stab_size = 0;    // |H|
  bool holds = false;
  bool equality = false;  // |A+B| == |A+H| + |B+H| - |H|
};

/// Throws UsageError when A or B is empty or the moduli differ.
KneserAudit kneser_check(const ResidueSet& a, const ResidueSet& b);

/// One Grynkiewicz instance for 1 <= t <= k.  Certifies whichever holds of
///   prefix inequality:  sum_{i=1..t} |(A+B)_i| >= t|A| + t|B| - 2t^2 + 1,
///   restricted equality: some A' in A, B' in B with |A\A'| + |B\B'| <= t-1
///                        and A' + B' = (A+B)_t.
/// Both are always attempted; the restriction search runs by increasing
/// removal count with early exit, capped at `effort_cap` candidate pairs.
struct GrynkiewiczAudit {
  long long t = 0;
  long long prefix_sum = 0;    // sum_{i=1..t} |(A+B)_i|
  long long prefix_bound = 0;  // t|A| + t|B| - 2t^2 + 1
  bool prefix_inequality = false;
  bool restricted_equality = false;
  std::optional<std::pair<ResidueSet, ResidueSet>> restriction_witness;  // (A', B')
  bool search_exhausted = true;  // false when the effort cap stopped the search
  bool holds = false;            // prefix_inequality || restricted_equality
};

GrynkiewiczAudit grynkiewicz_audit(const ResidueSet& a, const ResidueSet& b, long long t,
                                   long long effort_cap = 1'000'000);

/// True when every x in Z_k has x in A or -x in A (which forces 0 in A and,
/// for even k, k/2 in A).
bool symmetric_cover(const ResidueSet& a);

/// Smallest x violating the symmetric-cover condition, or nullopt.
std::optional<long long> symmetric_cover_gap(const ResidueSet& a);

/// All subsets of Z_k satisfying the symmetric-cover condition, sorted by
/// their ascending element lists.  There are 3^floor((k-1)/2) of them.
std::vector<ResidueSet> symmetric_cover_sets(long long modulus);

/// One growth-bound instance: requires the symmetric-cover condition on both
/// A and B and |S| >= |A||B| - eps3^2 k^2 (UsageError otherwise, naming the
/// failing x or the shortfall), then evaluates |A +_S B| >= (1/2 + eps4) k
/// by exact rational comparison.
struct GrowthAudit {
  long long restricted_size = 0;  // |A +_S B|
  Rat threshold;                  // (1/2 + eps4) * k
  bool holds = false;
  bool tie = false;  // |A +_S B| equals the threshold exactly
};

GrowthAudit growth_check(const ResidueSet& a, const ResidueSet& b, const PairRelation& s,
                         const Rat& eps3, const Rat& eps4);

/// Shared shape of the exhaustive/randomized audit sweeps: zero failures are
/// expected; the first failure (in the documented deterministic order) is
/// described when one exists.  Results are independent of `threads`.
struct SumsetSweep {
  long long checks = 0;
  long long failures = 0;
  std::optional<std::string> first_failure;
};

/// Kneser inequality over every pair of nonempty subsets of Z_k for each
/// k = 1..k_max (k_max <= 16; the instance count is 4^k per k).  Failures
/// are ordered by (k, elements of A, elements of B).
SumsetSweep kneser_exhaustive_audit(long long k_max, int threads = 1);

/// Kneser inequality on `trials` random instances: per trial a uniform
/// modulus k in [1, modulus_max], then A, B by independent coin flips
/// (re-rolled into a singleton when empty).  Deterministic in `seed` and
/// independent of `threads`; failures are ordered by trial index.
SumsetSweep kneser_random_audit(long long modulus_max, long long trials, std::uint64_t seed,
                                int threads = 1);

/// Grynkiewicz audit over every pair of nonempty subsets of Z_k for each
/// k = 1..k_max (k_max <= 12) and every t = 1..min(t_max, k).  A failure is
/// an instance where neither branch certifies; `incomplete_searches` counts
/// effort-capped restriction searches (expected zero at these sizes).
struct GrynkiewiczSweep {
  long long checks = 0;
  long long failures = 0;
  long long prefix_only = 0;
  long long restriction_only = 0;
  long long both_branches = 0;
  long long incomplete_searches = 0;
  std::optional<std::string> first_failure;
};

GrynkiewiczSweep grynkiewicz_exhaustive_audit(long long k_max, long long t_max, int threads = 1);

/// Growth bound over every ordered pair of symmetric-cover sets A, B in Z_k
/// for k = 1..k_max, with S = A x B (the only admissible relation when
/// eps3^2 k^2 < 1).  Ties (exact equality with the threshold) are counted
/// separately; failures are ordered by (k, elements of A, elements of B).
struct GrowthSweep {
  long long k_max = 0;
  Rat eps3;
  Rat eps4;
  long long pairs_tested = 0;
  long long failures = 0;
  long long ties = 0;
  std::optional<std::string> first_failure;
};

GrowthSweep exhaustive_growth_audit(long long k_max, const Rat& eps3, const Rat& eps4,
                                    int threads = 1);

}  // namespace edgesum
