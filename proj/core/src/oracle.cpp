#include "edgesum/oracle.hpp"

#include "edgesum/errors.hpp"
#include "edgesum/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace edgesum {

namespace {

std::string format_edge(const KEdge& e) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    if (i > 0) out << ", ";
    out << e.vertices[i];
  }
  out << "}";
  return out.str();
}

// ---------------------------------------------------------------------------
// LP plumbing: systems of <= rows over the n vertex variables.
// ---------------------------------------------------------------------------

struct FeasibilitySystem {
  std::size_t nvars = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;

  explicit FeasibilitySystem(std::size_t n) : nvars(n) {}

  /// total >= 0, encoded as -sum f <= 0.
  void add_total_row() {
    rows.emplace_back(nvars, Rat(-1));
    rhs.emplace_back(0);
  }

  /// f(e) <= -1 for the given vertex list.
  void add_pattern_row(const std::vector<long long>& vertices) {
    std::vector<Rat> row(nvars, Rat(0));
    for (long long v : vertices) row[static_cast<std::size_t>(v)] += 1;
    rows.push_back(std::move(row));
    rhs.emplace_back(-1);
  }

  /// f_0 >= f_1 >= ... >= f_{n-1}, encoded as f_{t+1} - f_t <= 0.  Used by
  /// the complete-hypergraph search paths so witnesses come out sorted
  /// decreasing (vertex id == rank), which is what makes the negative-edge
  /// family closed under coordinate-wise index increase.
  void add_sorted_rows() {
    for (std::size_t t = 0; t + 1 < nvars; ++t) {
      std::vector<Rat> row(nvars, Rat(0));
      row[t] = -1;
      row[t + 1] = 1;
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }

  LpResult solve() const { return solve_le_feasibility(nvars, rows, rhs); }
};

long long count_negative_edges(const Assignment& f, const std::vector<KEdge>& edges) {
  long long count = 0;
  for (const auto& e : edges) {
    if (edge_sum(f, e) < 0) ++count;
  }
  return count;
}

/// Star assignment (n-1 at vertex 0, -1 elsewhere); on the complete
/// hypergraph its nonnegative edges are exactly those through vertex 0,
/// C(n-1, k-1) of them, which gives the closed-form fallback bound.
Assignment star_assignment(long long n) {
  Assignment f(static_cast<std::size_t>(n), Rat(-1));
  f[0] = Rat(n - 1);
  return f;
}

MinNonnegative complete_bounds_only(const UniformHypergraph& h) {
  MinNonnegative out;
  out.exact = false;
  out.lower = 1;  // regular: making every edge negative contradicts total >= 0
  out.upper = binomial(h.n - 1, h.k - 1);
  out.witness = star_assignment(h.n);
  out.method = "bounds-only";
  out.budget_exhausted = true;
  return out;
}

MinNonnegative make_exact_result(long long m, long long best_negative, Assignment witness,
                                 std::string method, long long nodes, long long lps) {
  MinNonnegative out;
  out.exact = true;
  out.lower = m - best_negative;
  out.upper = out.lower;
  out.witness = std::move(witness);
  out.method = std::move(method);
  out.nodes_explored = nodes;
  out.lp_solves = lps;
  return out;
}

// ---------------------------------------------------------------------------
// Complete hypergraph, k = 2: staircase scan.
//
// Sort the minimizing assignment decreasing (vertex id == rank).  The
// negative pairs then form, for each first index a, a tail {b : b >= s_a},
// and closure under increasing the first index forces
// s_{a+1} <= max(s_a, a+2).  There are exactly 2^(n-1) such profiles; scan
// them by decreasing negative count and return on the first feasible LP.
// ---------------------------------------------------------------------------

MinNonnegative staircase_complete_pairs(const UniformHypergraph& h, long long budget) {
  const long long n = h.n;
  const long long m = static_cast<long long>(h.edge_count_small());
  const std::vector<KEdge> edges = h.materialize();

  struct Profile {
    long long size = 0;
    std::vector<long long> s;
  };
  std::vector<Profile> profiles;
  std::vector<long long> cur(static_cast<std::size_t>(n - 1), 0);
  std::function<void(long long, long long, long long)> rec = [&](long long a, long long prev,
                                                                 long long size) {
    if (a == n - 1) {
      profiles.push_back({size, cur});
      return;
    }
    const long long lo = a + 1;
    const long long hi = (a == 0) ? n : std::max(prev, a + 1);
    for (long long s = lo; s <= hi; ++s) {
      cur[static_cast<std::size_t>(a)] = s;
      rec(a + 1, s, size + (n - s));
    }
  };
  rec(0, 0, 0);
  std::sort(profiles.begin(), profiles.end(), [](const Profile& x, const Profile& y) {
    if (x.size != y.size) return x.size > y.size;
    return x.s < y.s;
  });

  long long lps = 0;
  for (const Profile& p : profiles) {
    if (lps >= budget) {
      MinNonnegative out = complete_bounds_only(h);
      out.method = "staircase";
      out.lp_solves = lps;
      return out;
    }
    ++lps;
    FeasibilitySystem sys(static_cast<std::size_t>(n));
    sys.add_total_row();
    sys.add_sorted_rows();
    for (long long a = 0; a < n - 1; ++a) {
      for (long long b = p.s[static_cast<std::size_t>(a)]; b < n; ++b) {
        sys.add_pattern_row({a, b});
      }
    }
    LpResult lp = sys.solve();
    if (lp.feasible) {
      if (count_negative_edges(lp.witness, edges) != p.size) {
        throw Error("staircase scan: witness negative count differs from its profile");
      }
      return make_exact_result(m, p.size, lp.witness, "staircase", lps, lps);
    }
  }
  throw Error("staircase scan: no feasible profile (the empty one always is)");
}

// ---------------------------------------------------------------------------
// Complete hypergraph, k >= 3, C(n, k) <= 30: dominance-ideal scan.
//
// Same sorted-assignment reduction: the negative family is closed under
// coordinate-wise index increase, i.e. it is an up-set of the dominance
// order on sorted index tuples.  Enumerate all up-sets (deciding elements
// in reverse lexicographic order, which is a linear extension), scan by
// decreasing cardinality, return on the first feasible LP.
// ---------------------------------------------------------------------------

std::optional<MinNonnegative> ideal_scan_complete(const UniformHypergraph& h, long long budget) {
  const long long n = h.n;
  const std::vector<KEdge> edges = h.materialize();
  const int m = static_cast<int>(edges.size());

  std::map<std::vector<long long>, int> index_of;
  for (int i = 0; i < m; ++i) index_of[edges[static_cast<std::size_t>(i)].vertices] = i;

  // succ_mask[i]: elements covering element i (one coordinate bumped by 1).
  std::vector<std::uint32_t> succ_mask(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    const auto& tuple = edges[static_cast<std::size_t>(i)].vertices;
    for (std::size_t c = 0; c < tuple.size(); ++c) {
      std::vector<long long> bumped = tuple;
      bumped[c] += 1;
      if (bumped[c] >= n) continue;
      if (c + 1 < bumped.size() && bumped[c] >= bumped[c + 1]) continue;
      succ_mask[static_cast<std::size_t>(i)] |=
          std::uint32_t{1} << index_of.at(bumped);
    }
  }

  constexpr std::size_t kUpsetCap = 2'000'000;
  std::vector<std::pair<int, std::uint32_t>> upsets;  // (cardinality, mask)
  bool overflow = false;
  std::function<void(int, std::uint32_t, int)> rec = [&](int idx, std::uint32_t mask, int size) {
    if (overflow) return;
    if (idx < 0) {
      if (upsets.size() >= kUpsetCap) {
        overflow = true;
        return;
      }
      upsets.emplace_back(size, mask);
      return;
    }
    rec(idx - 1, mask, size);
    const std::uint32_t need = succ_mask[static_cast<std::size_t>(idx)];
    if ((mask & need) == need) {
      rec(idx - 1, mask | (std::uint32_t{1} << idx), size + 1);
    }
  };
  rec(m - 1, 0, 0);
  if (overflow) return std::nullopt;  // caller falls back to branch-and-bound

  std::sort(upsets.begin(), upsets.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });

  long long lps = 0;
  for (const auto& [size, mask] : upsets) {
    if (lps >= budget) {
      MinNonnegative out = complete_bounds_only(h);
      out.method = "ideal-scan";
      out.lp_solves = lps;
      return out;
    }
    ++lps;
    FeasibilitySystem sys(static_cast<std::size_t>(n));
    sys.add_total_row();
    sys.add_sorted_rows();
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        sys.add_pattern_row(edges[static_cast<std::size_t>(i)].vertices);
      }
    }
    LpResult lp = sys.solve();
    if (lp.feasible) {
      if (count_negative_edges(lp.witness, edges) != size) {
        throw Error("ideal scan: witness negative count differs from its up-set");
      }
      return make_exact_result(m, size, lp.witness, "ideal-scan", lps, lps);
    }
  }
  throw Error("ideal scan: no feasible up-set (the empty one always is)");
}

// ---------------------------------------------------------------------------
// Generic branch-and-bound over edge subsets.
// ---------------------------------------------------------------------------

/// Rotation step that preserves the edge set: 1 for the cyclic
/// constructions and the complete hypergraph, k for the matching (blocks
/// rotate onto blocks), 0 to disable the reduction for unknown labels.
long long orbit_shift_step(const UniformHypergraph& h) {
  if (h.label == "matching") return h.k;
  if (h.label == "double-interval" || h.label == "tight-cycle" || h.label == "complete") return 1;
  return 0;
}

/// Indices of the edges that are lexicographically minimal in their orbit
/// under the shift subgroup generated by `step`, in ascending order.
std::vector<long long> orbit_representatives(const std::vector<KEdge>& edges, long long n,
                                             long long step) {
  const long long g = std::gcd(step, n);
  const long long orbit_len = n / g;
  std::vector<long long> reps;
  for (long long idx = 0; idx < static_cast<long long>(edges.size()); ++idx) {
    const KEdge& e = edges[static_cast<std::size_t>(idx)];
    bool minimal = true;
    for (long long d = 1; d < orbit_len && minimal; ++d) {
      std::vector<long long> shifted = e.vertices;
      for (long long& v : shifted) v += d * step;
      if (make_kedge(std::move(shifted), n) < e) minimal = false;
    }
    if (minimal) reps.push_back(idx);
  }
  return reps;
}

struct BnbState {
  const std::vector<KEdge>* edges = nullptr;
  std::size_t n = 0;
  long long m = 0;
  bool regular = false;
  long long budget = 0;
  long long nodes = 0;
  long long lps = 0;
  bool aborted = false;
  long long incumbent = 0;  ///< best negative-edge count achieved by a witness
  Assignment best_witness;
  std::vector<int> state;  ///< per edge: 0 undecided, 1 forced, 2 excluded
  std::vector<long long> forced_vertex_use;
  long long forced = 0;
  long long excluded = 0;
};

void bnb_force(BnbState& st, long long e) {
  st.state[static_cast<std::size_t>(e)] = 1;
  ++st.forced;
  for (long long v : (*st.edges)[static_cast<std::size_t>(e)].vertices) {
    ++st.forced_vertex_use[static_cast<std::size_t>(v)];
  }
}

void bnb_unforce(BnbState& st, long long e) {
  st.state[static_cast<std::size_t>(e)] = 0;
  --st.forced;
  for (long long v : (*st.edges)[static_cast<std::size_t>(e)].vertices) {
    --st.forced_vertex_use[static_cast<std::size_t>(v)];
  }
}

LpResult bnb_solve_forced(BnbState& st) {
  ++st.lps;
  FeasibilitySystem sys(st.n);
  sys.add_total_row();
  for (long long e = 0; e < st.m; ++e) {
    if (st.state[static_cast<std::size_t>(e)] == 1) {
      sys.add_pattern_row((*st.edges)[static_cast<std::size_t>(e)].vertices);
    }
  }
  return sys.solve();
}

void bnb_update_incumbent(BnbState& st, const Assignment& witness) {
  const long long negatives = count_negative_edges(witness, *st.edges);
  if (negatives > st.incumbent) {
    st.incumbent = negatives;
    st.best_witness = witness;
  }
}

void bnb_explore(BnbState& st) {
  if (st.aborted) return;
  if (st.nodes >= st.budget) {
    st.aborted = true;
    return;
  }
  ++st.nodes;
  const long long undecided = st.m - st.forced - st.excluded;
  long long potential = st.forced + undecided;
  if (st.regular) potential = std::min(potential, st.m - 1);
  if (potential <= st.incumbent) return;
  if (undecided == 0) return;

  // Branch on the undecided edge sharing the most vertices with the forced
  // set (overlap drives infeasibility early); ties go to the smallest index.
  long long pick = -1;
  long long best_score = -1;
  for (long long e = 0; e < st.m; ++e) {
    if (st.state[static_cast<std::size_t>(e)] != 0) continue;
    long long score = 0;
    for (long long v : (*st.edges)[static_cast<std::size_t>(e)].vertices) {
      if (st.forced_vertex_use[static_cast<std::size_t>(v)] > 0) ++score;
    }
    if (score > best_score) {
      best_score = score;
      pick = e;
    }
  }

  bnb_force(st, pick);
  LpResult lp = bnb_solve_forced(st);
  if (lp.feasible) {
    bnb_update_incumbent(st, lp.witness);
    bnb_explore(st);
  }
  bnb_unforce(st, pick);
  if (st.aborted) return;

  st.state[static_cast<std::size_t>(pick)] = 2;
  ++st.excluded;
  bnb_explore(st);
  st.state[static_cast<std::size_t>(pick)] = 0;
  --st.excluded;
}

MinNonnegative bnb_min_nonnegative(const UniformHypergraph& h, const std::vector<KEdge>& edges,
                                   long long budget) {
  BnbState st;
  st.edges = &edges;
  st.n = static_cast<std::size_t>(h.n);
  st.m = static_cast<long long>(edges.size());
  st.regular = regular_degree(h) >= 0;
  st.budget = budget;
  st.incumbent = 0;
  st.best_witness = Assignment(st.n, Rat(0));  // every edge sums to 0: all nonnegative
  st.state.assign(static_cast<std::size_t>(st.m), 0);
  st.forced_vertex_use.assign(st.n, 0);

  // Root symmetry reduction: a nonempty negative family can be shifted so
  // that it contains an orbit representative; case q forces representative
  // q and excludes the earlier ones.  The empty family is the incumbent's
  // starting point.
  const long long step = orbit_shift_step(h);
  std::vector<long long> reps;
  if (step > 0) {
    reps = orbit_representatives(edges, h.n, step);
  } else {
    reps.resize(static_cast<std::size_t>(st.m));
    std::iota(reps.begin(), reps.end(), 0);
  }
  for (long long rep : reps) {
    if (st.nodes >= st.budget) {
      st.aborted = true;
      break;
    }
    ++st.nodes;
    bnb_force(st, rep);
    LpResult lp = bnb_solve_forced(st);
    if (lp.feasible) {
      bnb_update_incumbent(st, lp.witness);
      bnb_explore(st);
    }
    bnb_unforce(st, rep);
    st.state[static_cast<std::size_t>(rep)] = 2;
    ++st.excluded;
    if (st.aborted) break;
  }
  for (long long rep : reps) {
    if (st.state[static_cast<std::size_t>(rep)] == 2) {
      st.state[static_cast<std::size_t>(rep)] = 0;
      --st.excluded;
    }
  }

  if (st.aborted) {
    MinNonnegative out;
    out.exact = false;
    out.lower = st.regular ? 1 : 0;
    out.upper = st.m - st.incumbent;
    out.witness = st.best_witness;
    out.method = "branch-and-bound";
    out.nodes_explored = st.nodes;
    out.lp_solves = st.lps;
    out.budget_exhausted = true;
    return out;
  }
  return make_exact_result(st.m, st.incumbent, st.best_witness, "branch-and-bound", st.nodes,
                           st.lps);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

PatternFeasibility feasible_negative_pattern(const UniformHypergraph& h,
                                             const std::vector<KEdge>& pattern) {
  std::vector<KEdge> pat = pattern;
  std::sort(pat.begin(), pat.end());
  pat.erase(std::unique(pat.begin(), pat.end()), pat.end());
  for (const KEdge& e : pat) {
    if (h.lazy_complete) {
      bool ok = static_cast<long long>(e.vertices.size()) == h.k;
      for (std::size_t i = 0; ok && i < e.vertices.size(); ++i) {
        if (e.vertices[i] < 0 || e.vertices[i] >= h.n) ok = false;
        if (i + 1 < e.vertices.size() && e.vertices[i] >= e.vertices[i + 1]) ok = false;
      }
      if (!ok) {
        throw UsageError("feasible_negative_pattern: " + format_edge(e) +
                         " is not an edge of the complete host");
      }
    } else if (!std::binary_search(h.edges.begin(), h.edges.end(), e)) {
      throw UsageError("feasible_negative_pattern: " + format_edge(e) +
                       " is not an edge of the host");
    }
  }

  FeasibilitySystem sys(static_cast<std::size_t>(h.n));
  sys.add_total_row();
  for (const KEdge& e : pat) sys.add_pattern_row(e.vertices);
  LpResult lp = sys.solve();

  PatternFeasibility out;
  out.feasible = lp.feasible;
  out.lp_pivots = lp.pivots;
  if (lp.feasible) out.witness = lp.witness;
  return out;
}

MinNonnegative min_nonnegative_exact(const UniformHypergraph& h, long long node_budget) {
  if (node_budget < 1) {
    throw UsageError("min_nonnegative_exact: node_budget must be >= 1, got " +
                     std::to_string(node_budget));
  }
  if (h.label == "complete") {
    if (h.k == 2 && h.n <= 16) return staircase_complete_pairs(h, node_budget);
    if (h.k >= 3 && binomial(h.n, h.k) <= 30) {
      if (auto scanned = ideal_scan_complete(h, node_budget)) return *scanned;
    }
    if (binomial(h.n, h.k) > 2000) return complete_bounds_only(h);
  }
  const std::vector<KEdge> edges = h.materialize();
  return bnb_min_nonnegative(h, edges, node_budget);
}

UpperBoundWitness min_nonnegative_upper(const UniformHypergraph& h, std::uint64_t seed,
                                        const std::vector<std::string>& strategies) {
  const long long n = h.n;
  const auto wanted = [&strategies](const std::string& name) {
    if (strategies.empty()) return true;
    for (const std::string& s : strategies) {
      if (name == s || name.rfind(s + "-", 0) == 0) return true;
    }
    return false;
  };

  std::vector<std::pair<std::string, Assignment>> candidates;
  for (const std::string& kind : example_assignment_kinds()) {
    if (!wanted(kind)) continue;
    try {
      candidates.emplace_back(kind, example_assignment(kind, n, h.k));
    } catch (const UsageError&) {
      // kind does not fit this (n, k); skip
    }
  }
  for (long long r = 1; r <= std::min<long long>(4, n - 1); ++r) {
    if (wanted("negative-block-" + std::to_string(r))) {
      Assignment block(static_cast<std::size_t>(n), Rat(r));
      for (long long v = 0; v < r; ++v) block[static_cast<std::size_t>(v)] = Rat(r - n);
      candidates.emplace_back("negative-block-" + std::to_string(r), std::move(block));
    }
    if (r >= 2 && wanted("negative-spread-" + std::to_string(r))) {
      Assignment spread(static_cast<std::size_t>(n), Rat(r));
      for (long long t = 0; t < r; ++t) {
        spread[static_cast<std::size_t>(t * n / r)] = Rat(r - n);
      }
      candidates.emplace_back("negative-spread-" + std::to_string(r), std::move(spread));
    }
  }
  if (candidates.empty()) {
    throw UsageError("min_nonnegative_upper: no requested strategy fits this host");
  }

  UpperBoundWitness best;
  bool have_best = false;
  for (auto& [name, f] : candidates) {
    const BigInt count = count_nonnegative(f, h).nonnegative_count;
    if (!have_best || count < best.count) {
      best.count = count;
      best.witness = std::move(f);
      best.strategy = name;
      have_best = true;
    }
  }

  // Seeded local search: swap two positions, keep strict improvements.  The
  // value multiset is fixed, so the total stays nonnegative.
  long long m_small = 0;
  bool can_search = wanted("local-search");
  try {
    m_small = static_cast<long long>(h.edge_count_small());
  } catch (const UsageError&) {
    can_search = false;  // astronomically many edges; candidates only
  }
  if (can_search && n >= 2) {
    const long long iters = std::max<long long>(32, std::min<long long>(300, 200000 / std::max<long long>(1, m_small)));
    std::mt19937_64 rng(seed);
    Assignment f = best.witness;
    BigInt count = best.count;
    bool improved = false;
    for (long long it = 0; it < iters; ++it) {
      const auto u = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
      const auto v = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
      if (u == v || f[u] == f[v]) continue;
      std::swap(f[u], f[v]);
      const BigInt swapped = count_nonnegative(f, h).nonnegative_count;
      if (swapped < count) {
        count = swapped;
        improved = true;
      } else {
        std::swap(f[u], f[v]);
      }
    }
    if (improved && count < best.count) {
      best.count = count;
      best.witness = f;
      best.strategy += "+local-search";
    }
  }
  return best;
}

std::string to_string(ThresholdStatus status) {
  switch (status) {
    case ThresholdStatus::Holds:
      return "holds";
    case ThresholdStatus::Fails:
      return "fails";
    case ThresholdStatus::Unknown:
      return "unknown";
  }
  throw Error("to_string: unhandled threshold status");
}

ThresholdVerdict threshold_verdict(const UniformHypergraph& h, long long node_budget,
                                   std::uint64_t seed) {
  ThresholdVerdict out;
  out.delta = min_degree(h);
  const bool regular = regular_degree(h) >= 0;

  UpperBoundWitness ub = min_nonnegative_upper(h, seed);
  if (ub.count < out.delta) {
    out.status = ThresholdStatus::Fails;
    out.witness = ub.witness;
    out.min_count.exact = false;
    out.min_count.lower = regular ? 1 : 0;
    out.min_count.upper = ub.count;
    out.min_count.witness = std::move(ub.witness);
    out.min_count.method = "portfolio:" + ub.strategy;
    out.note = "portfolio witness (" + ub.strategy + ") already below delta";
    return out;
  }

  MinNonnegative mn = min_nonnegative_exact(h, node_budget);
  if (!mn.exact && ub.count < mn.upper) {
    mn.upper = ub.count;
    mn.witness = std::move(ub.witness);
    mn.method += "+portfolio:" + ub.strategy;
  }
  out.min_count = mn;
  if (mn.exact) {
    if (mn.lower >= out.delta) {
      out.status = ThresholdStatus::Holds;
      out.note = "exact minimum " + mn.lower.str() + " meets delta";
    } else {
      out.status = ThresholdStatus::Fails;
      out.witness = mn.witness;
      out.note = "exact minimum " + mn.lower.str() + " below delta";
    }
  } else if (mn.upper < out.delta) {
    out.status = ThresholdStatus::Fails;
    out.witness = mn.witness;
    out.note = "upper bound " + mn.upper.str() + " below delta";
  } else if (mn.lower >= out.delta) {
    out.status = ThresholdStatus::Holds;
    out.note = "lower bound " + mn.lower.str() + " meets delta";
  } else {
    out.status = ThresholdStatus::Unknown;
    out.note = "bounds [" + mn.lower.str() + ", " + mn.upper.str() + "] straddle delta";
  }
  return out;
}

}  // namespace edgesum
