#pragma once

// Exact oracles for the threshold property.  The central question: over all
// assignments with nonnegative total, what is the minimum number of edges
// with nonnegative sum?  Equivalently (and this is how the search works),
// what is the largest edge set that can be made simultaneously negative?
// The verdict compares the minimum against the minimum degree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgesum/assignment.hpp"
#include "edgesum/cyclic.hpp"
#include "edgesum/hypergraph.hpp"
#include "edgesum/rational.hpp"

namespace edgesum {

/// Answer to "is there an assignment with nonnegative total that makes every
/// edge of the pattern negative?".  Negativity is normalized to f(e) <= -1:
/// the constraint system is closed under positive scaling, so the
/// normalization loses no generality while keeping the feasible region
/// closed for the exact LP.
struct PatternFeasibility {
  bool feasible = false;
  /// A satisfying assignment when feasible: total >= 0 and every pattern
  /// edge sums to <= -1.
  std::optional<Assignment> witness;
  long long lp_pivots = 0;
};

/// Decides pattern feasibility exactly.  Every pattern edge must be an edge
/// of `h` (usage error otherwise); duplicate pattern entries collapse.
/// Monotone: any subset of a feasible pattern is feasible.
PatternFeasibility feasible_negative_pattern(const UniformHypergraph& h,
                                             const std::vector<KEdge>& pattern);

/// Exact minimum of the nonnegative-edge count over all assignments with
/// nonnegative total, or rigorous bounds when the search is out of reach.
struct MinNonnegative {
  bool exact = false;
  BigInt lower{0};  ///< valid lower bound; equals `upper` when exact
  BigInt upper{0};  ///< valid upper bound, achieved by `witness` exactly
  /// Assignment with nonnegative total whose nonnegative-edge count equals
  /// `upper` on the nose (re-evaluating it reproduces the bound bit-exactly).
  std::optional<Assignment> witness;
  /// Search route taken: "staircase" (complete, k = 2), "ideal-scan"
  /// (complete, small ground set), "branch-and-bound", or "bounds-only".
  std::string method;
  long long nodes_explored = 0;
  long long lp_solves = 0;
  /// True when the node budget (or a size gate) stopped the search before
  /// an exact answer; `lower`/`upper` then carry the best proven bounds.
  bool budget_exhausted = false;
};

/// Computes the exact minimum when the instance is within reach:
///   * complete hypergraphs with k = 2 and n <= 16 scan the staircase
///     profiles of negative-edge down-sets over sorted assignments;
///   * complete hypergraphs with k >= 3 and C(n, k) <= 30 scan the ideals
///     of the dominance order on sorted index tuples;
///   * every materialized hypergraph runs branch-and-bound over edge
///     subsets with exact-LP pruning, an include-first branching rule that
///     picks the undecided edge overlapping the forced set most, and a
///     rotation-orbit reduction at the root.
/// Out-of-reach instances return bounds (for regular hypergraphs the lower
/// bound is 1: making every edge negative contradicts a nonnegative total).
/// node_budget caps branch-and-bound nodes / candidate LP solves.
MinNonnegative min_nonnegative_exact(const UniformHypergraph& h, long long node_budget = 200000);

/// Upper bound from a deterministic portfolio: the named example
/// assignments that fit the host, block/spread patterns with a few large
/// negative values, and a seeded swap-based local search.  Always >= the
/// true minimum; `count` is the exact nonnegative-edge count of `witness`.
struct UpperBoundWitness {
  BigInt count{0};
  Assignment witness;
  std::string strategy;  ///< portfolio member that produced the bound
};

/// `strategies` restricts the portfolio when nonempty; members are the
/// example-assignment kinds ("star", "three_heavy", "tight_cycle_k3",
/// "h5k_mod"), "negative-block", "negative-spread", and "local-search".
/// Usage error when the restriction matches nothing that fits the host.
UpperBoundWitness min_nonnegative_upper(const UniformHypergraph& h, std::uint64_t seed = 1,
                                        const std::vector<std::string>& strategies = {});

/// Verdict on the threshold property: Holds when the exact minimum is known
/// to be >= the minimum degree, Fails when some witness assignment has
/// fewer nonnegative edges than the minimum degree, Unknown otherwise.
enum class ThresholdStatus { Holds, Fails, Unknown };
std::string to_string(ThresholdStatus status);

struct ThresholdVerdict {
  ThresholdStatus status = ThresholdStatus::Unknown;
  long long delta = 0;  ///< minimum degree, the bar the minimum is held to
  MinNonnegative min_count;
  /// Present when status == Fails: an assignment with nonnegative total and
  /// fewer than `delta` nonnegative edges.
  std::optional<Assignment> witness;
  std::string note;  ///< one-line route description for reports
};

/// Runs the upper-bound portfolio first (a witness below delta settles
/// Fails without search), then the exact oracle within the node budget.
ThresholdVerdict threshold_verdict(const UniformHypergraph& h, long long node_budget = 200000,
                                   std::uint64_t seed = 1);

}  // namespace edgesum
