#include "edgesum/family_catalog.hpp"

#include "edgesum/errors.hpp"
#include "edgesum/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace edgesum {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::ij_ge_k_i_ge_j:
      return "ij_ge_k_i_ge_j";
    case CaseTag::ij_ge_k_j_lt_i:
      return "ij_ge_k_j_lt_i";
    case CaseTag::ij_lt_k_i_even:
      return "ij_lt_k_i_even";
    case CaseTag::ij_lt_k_i_odd:
      return "ij_lt_k_i_odd";
  }
  throw Error("to_string(CaseTag): invalid tag");
}

std::string to_string(CoverVerdict verdict) {
  switch (verdict) {
    case CoverVerdict::Verified:
      return "Verified";
    case CoverVerdict::DegenerateSkipped:
      return "DegenerateSkipped";
    case CoverVerdict::Failed:
      return "Failed";
  }
  throw Error("to_string(CoverVerdict): invalid verdict");
}

namespace {

void check_case_params(long long i, long long j, long long k) {
  if (k < 2) throw UsageError("case_of: k must be >= 2, got " + std::to_string(k));
  if (i < 1 || i > k - 1 || j < 1 || j > k - 1) {
    throw UsageError("case_of: need i, j in [1, k-1]; got i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                     ", k=" + std::to_string(k));
  }
}

}  // namespace

CaseTag case_of(long long i, long long j, long long k) {
  check_case_params(i, j, k);
  if (i + j >= k) {
    return i >= j ? CaseTag::ij_ge_k_i_ge_j : CaseTag::ij_ge_k_j_lt_i;
  }
  return i % 2 == 0 ? CaseTag::ij_lt_k_i_even : CaseTag::ij_lt_k_i_odd;
}

std::vector<SlotFormula> slot_formulas(long long i, long long j, long long k) {
  switch (case_of(i, j, k)) {
    case CaseTag::ij_ge_k_i_ge_j:
      return {
          {1, 0, i, j},
          {2, k + j, i, i + j - k},
          {3, k + i + j, i + j - k, 2 * k - 2 * i},
          {4, i, j, k - i},
          {5, k + i + 2 * j, k - i, 2 * k - i - j},
          {6, i, j, 2 * k - i - j},
          {7, 3 * k - j, i, j},
          {8, 3 * k - j + i, j, k - i},
          {9, i, i + j - k, 2 * k - 2 * i},
          {10, i + j, k - i, 2 * k - i - j},
          {11, 2 * k, i, j},
          {12, 2 * k + i, j, k - i},
      };
    case CaseTag::ij_ge_k_j_lt_i:
      return {
          {13, 0, i, j},
          {14, k + j, j, i + j - k},
          {15, k + 2 * j, i + j - k, 2 * k - 2 * j},
          {16, i, j, k - i},
          {17, k + i + 2 * j, k - j, 2 * k - i - j},
          {18, i, j, 2 * k - i - j},
          {19, 3 * k - j, i, j},
          {20, 3 * k - j + i, j, k - i},
          {21, 0, j, i + j - k},
          {22, j, i + j - k, 2 * k - 2 * j},
          {23, i + j, k - j, 2 * k - i - j},
          {24, 2 * k, i, j},
          {25, 2 * k + i, j, k - i},
      };
    case CaseTag::ij_lt_k_i_even:
    case CaseTag::ij_lt_k_i_odd: {
      const bool even = (i % 2 == 0);
      const long long h = even ? i / 2 : (i - 1) / 2;
      const int base = even ? 26 : 41;
      return {
          {base + 0, 0, i, j},
          {base + 1, k + j, k - h, i + j},
          {base + 2, 2 * k + j - h, i + j, i},
          {base + 3, 0, i + j, h},
          {base + 4, 2 * k + i + 2 * j, h, k - h},
          {base + 5, i, j + h, k - i - j},
          {base + 6, 2 * k - j, k - h, i + j},
          {base + 7, 3 * k - j - h, i + j, i},
          {base + 8, 3 * k + i, h, k - h},
          {base + 9, 0, k - h, i + j},
          {base + 10, k - h, i + j, i},
          {base + 11, k + i + j, h, k - i - j},
          {base + 12, i, j, k - i},
          {base + 13, 2 * k, i, j},
          {base + 14, 2 * k + i, j, k - i},
      };
    }
  }
  throw Error("slot_formulas: invalid case");
}

EdgeFamily edge_family(long long v, long long i, long long j, long long k, long long n) {
  if (n < 12 * k) {
    throw UsageError("edge_family: n must be >= 12k (" + std::to_string(12 * k) +
                     ") so the catalog's offsets (up to ~6k around v) cannot wrap into each other; got n=" +
                     std::to_string(n));
  }
  EdgeFamily family;
  family.v = v;
  family.i = i;
  family.j = j;
  family.k = k;
  family.n = n;
  family.tag = case_of(i, j, k);
  const auto formulas = slot_formulas(i, j, k);
  family.slots.reserve(formulas.size());
  for (const auto& formula : formulas) {
    SlotEdge slot;
    slot.formula = formula;
    slot.valid = formula.a >= 1 && formula.a <= k - 1 && formula.b >= 1 && formula.b <= k - 1;
    if (slot.valid) {
      slot.edge = double_interval_edge(v + formula.offset, formula.a, formula.b, k, n);
      family.valid_edges.push_back(slot.edge);
    }
    family.slots.push_back(std::move(slot));
  }
  return family;
}

KEdge reflect_edge(const KEdge& edge, long long v, long long n) {
  std::vector<long long> reflected;
  reflected.reserve(edge.vertices.size());
  for (long long x : edge.vertices) reflected.push_back(2 * v - x);
  return make_kedge(std::move(reflected), n);
}

std::vector<KEdge> reflected_valid_edges(const EdgeFamily& family) {
  std::vector<KEdge> out;
  out.reserve(family.valid_edges.size());
  for (const auto& edge : family.valid_edges) out.push_back(reflect_edge(edge, family.v, family.n));
  return out;
}

std::vector<KEdge> vertex_family(long long v, long long k, long long n) {
  std::set<KEdge> edges;
  for (long long i = 1; i <= k - 1; ++i) {
    for (long long j = 1; j <= k - 1; ++j) {
      const auto family = edge_family(v, i, j, k, n);
      for (const auto& edge : family.valid_edges) edges.insert(edge);
      for (const auto& edge : reflected_valid_edges(family)) edges.insert(edge);
    }
  }
  return {edges.begin(), edges.end()};
}

// ---------------------------------------------------------------------------
// Cover audit.
// ---------------------------------------------------------------------------

namespace {

CoverConstituent from_slot(const std::vector<SlotFormula>& formulas, int global_slot) {
  for (const auto& formula : formulas) {
    if (formula.slot == global_slot) {
      CoverConstituent c;
      c.offset = formula.offset;
      c.a = formula.a;
      c.b = formula.b;
      c.matches_slot_table = true;
      c.slot_ref = global_slot;
      return c;
    }
  }
  throw Error("cover audit: slot " + std::to_string(global_slot) + " not present in the case's slot list");
}

CoverConstituent forced(long long offset, long long a, long long b, int near_slot) {
  CoverConstituent c;
  c.offset = offset;
  c.a = a;
  c.b = b;
  c.matches_slot_table = false;
  c.slot_ref = near_slot;
  return c;
}

/// The constituent list of one cover item, together with (for item 5) the
/// positions of the designated intersecting pair.
struct ItemPlan {
  std::vector<CoverConstituent> constituents;
  int pair_first = -1;
  int pair_second = -1;
};

ItemPlan item_plan(CaseTag tag, int item, long long i, long long j, long long k) {
  const auto formulas = slot_formulas(i, j, k);
  const auto take = [&](std::initializer_list<int> slots) {
    std::vector<CoverConstituent> out;
    for (int s : slots) out.push_back(from_slot(formulas, s));
    return out;
  };
  ItemPlan plan;
  switch (tag) {
    case CaseTag::ij_ge_k_i_ge_j:
      switch (item) {
        case 1:
          plan.constituents = take({1, 4});
          return plan;
        case 2:
          plan.constituents = {forced(0, i, i + j - k, 0), from_slot(formulas, 9), from_slot(formulas, 10)};
          return plan;
        case 3:
          plan.constituents = take({1, 4, 11, 12});
          return plan;
        case 4:
          plan.constituents = take({1, 2, 3, 5});
          return plan;
        case 5:
          plan.constituents = take({1, 4, 6, 7, 8});
          plan.pair_first = 1;  // slot 4
          plan.pair_second = 2;  // slot 6
          return plan;
      }
      break;
    case CaseTag::ij_ge_k_j_lt_i:
      switch (item) {
        case 1:
          plan.constituents = take({13, 16});
          return plan;
        case 2:
          plan.constituents = take({21, 22, 23});
          return plan;
        case 3:
          plan.constituents = take({13, 16, 24, 25});
          return plan;
        case 4:
          plan.constituents = take({13, 14, 15, 17});
          return plan;
        case 5:
          plan.constituents = take({13, 16, 18, 19, 20});
          plan.pair_first = 1;  // slot 16
          plan.pair_second = 2;  // slot 18
          return plan;
      }
      break;
    case CaseTag::ij_lt_k_i_even: {
      const long long h = i / 2;
      switch (item) {
        case 1:
          plan.constituents = take({26, 38});
          return plan;
        case 2:
          plan.constituents = take({35, 36, 37});
          return plan;
        case 3:
          plan.constituents = take({26, 38, 39, 40});
          return plan;
        case 4:
          plan.constituents = take({26, 27, 28});
          plan.constituents.push_back(forced(2 * k + i + 2 * j, h, k - i - j, 30));
          return plan;
        case 5:
          plan.constituents = take({29, 31, 32, 33});
          plan.constituents.push_back(forced(3 * k + i, h, k - i - j, 34));
          plan.pair_first = 0;  // slot 29
          plan.pair_second = 1;  // slot 31
          return plan;
      }
      break;
    }
    case CaseTag::ij_lt_k_i_odd: {
      const long long h = (i - 1) / 2;
      switch (item) {
        case 1:
          plan.constituents = take({41, 53});
          return plan;
        case 2:
          plan.constituents = take({50, 51});
          plan.constituents.push_back(forced(k + i + j, h + 1, k - i - j, 52));
          return plan;
        case 3:
          plan.constituents = take({41, 53, 54, 55});
          return plan;
        case 4:
          plan.constituents = take({41, 42, 43});
          plan.constituents.push_back(forced(2 * k + i + 2 * j, h + 1, k - i - j, 45));
          return plan;
        case 5:
          plan.constituents = take({44, 46, 47, 48});
          plan.constituents.push_back(forced(3 * k + i, h + 1, k - i - j, 49));
          plan.pair_first = 0;  // slot 44
          plan.pair_second = 1;  // slot 46
          return plan;
      }
      break;
    }
  }
  throw Error("item_plan: invalid item " + std::to_string(item));
}

/// Vertex set of e(offset, a, b) in plain (non-modular) coordinates.
std::vector<long long> plain_vertices(const CoverConstituent& c, long long k) {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(k));
  for (long long t = 0; t < c.a; ++t) out.push_back(c.offset + t);
  for (long long t = 0; t < k - c.a; ++t) out.push_back(c.offset + c.a + c.b + t);
  return out;
}

CoverItemResult audit_item(long long k, long long i, long long j, int item) {
  CoverItemResult result;
  result.i = i;
  result.j = j;
  result.item = item;
  result.tag = case_of(i, j, k);

  auto plan = item_plan(result.tag, item, i, j, k);
  result.pair_first = plan.pair_first;
  result.pair_second = plan.pair_second;
  result.uses_extra_interval = (item == 4);
  result.target_lo = 0;
  switch (item) {
    case 1:
      result.target_hi = 2 * k - 1;
      break;
    case 2:
      result.target_hi = 3 * k - 1;
      break;
    case 3:
      result.target_hi = 4 * k - 1;
      break;
    case 4:
      result.target_hi = 4 * k + j - 1;
      break;
    case 5:
      result.target_hi = 5 * k - j - 1;
      break;
    default:
      throw Error("audit_item: invalid item");
  }

  bool any_degenerate = false;
  for (auto& c : plan.constituents) {
    c.degenerate = !(c.a >= 1 && c.a <= k - 1 && c.b >= 1 && c.b <= k - 1);
    any_degenerate = any_degenerate || c.degenerate;
  }
  result.constituents = plan.constituents;
  if (any_degenerate) {
    result.verdict = CoverVerdict::DegenerateSkipped;
    return result;
  }

  // Multiset coverage over plain coordinates.
  const long long span = 6 * k + 2;
  std::vector<long long> coverage(static_cast<std::size_t>(span), 0);
  bool out_of_span = false;
  for (const auto& c : result.constituents) {
    for (long long x : plain_vertices(c, k)) {
      if (x < 0 || x >= span) {
        out_of_span = true;
      } else {
        coverage[static_cast<std::size_t>(x)] += 1;
      }
    }
  }
  if (item == 4) {
    for (long long x = i; x <= i + j - 1; ++x) coverage[static_cast<std::size_t>(x)] += 1;
  }

  const long long inter_lo = i, inter_hi = i + j - 1;  // I = [v+i, v+i+j-1]
  bool ok = !out_of_span;
  for (long long x = 0; x < span; ++x) {
    long long expected = (x >= result.target_lo && x <= result.target_hi) ? 1 : 0;
    if (item == 5 && x >= inter_lo && x <= inter_hi) expected = 2;
    if (coverage[static_cast<std::size_t>(x)] != expected) {
      ok = false;
      if (result.offending.size() < 32) result.offending.push_back(x);
    }
  }

  if (ok && item == 5) {
    // Exactly one pair of constituents may intersect, the designated one,
    // and the intersection must be exactly I.
    const auto& cs = result.constituents;
    for (std::size_t p = 0; p < cs.size() && ok; ++p) {
      for (std::size_t q = p + 1; q < cs.size() && ok; ++q) {
        const auto pv = plain_vertices(cs[p], k);
        const auto qv = plain_vertices(cs[q], k);
        std::vector<long long> inter;
        std::set_intersection(pv.begin(), pv.end(), qv.begin(), qv.end(), std::back_inserter(inter));
        const bool designated =
            (static_cast<int>(p) == result.pair_first && static_cast<int>(q) == result.pair_second);
        if (designated) {
          std::vector<long long> expected_inter;
          for (long long x = inter_lo; x <= inter_hi; ++x) expected_inter.push_back(x);
          if (inter != expected_inter) ok = false;
        } else if (!inter.empty()) {
          ok = false;
        }
        if (!ok && result.offending.empty()) {
          result.offending = inter;  // report the unexpected intersection
        }
      }
    }
  }

  result.verdict = ok ? CoverVerdict::Verified : CoverVerdict::Failed;
  return result;
}

}  // namespace

std::vector<CoverItemResult> audit_cover_case(long long k, long long i, long long j) {
  if (k < 3) throw UsageError("audit_cover_case: k must be >= 3, got " + std::to_string(k));
  std::vector<CoverItemResult> out;
  out.reserve(5);
  for (int item = 1; item <= 5; ++item) out.push_back(audit_item(k, i, j, item));
  return out;
}

std::vector<std::string> cover_variance_notes() {
  return {
      "case ij_ge_k_i_ge_j item (ii): forced constituent e(v, i, i+j-k) has no matching entry among slots 1..12",
      "case ij_lt_k_i_even item (iv): forced constituent e(v+2k+i+2j, h, k-i-j) differs from slot 30 "
      "e(v+2k+i+2j, h, k-h) in the gap parameter",
      "case ij_lt_k_i_even item (v): forced constituent e(v+3k+i, h, k-i-j) differs from slot 34 "
      "e(v+3k+i, h, k-h) in the gap parameter",
      "case ij_lt_k_i_odd item (ii): forced constituent e(v+k+i+j, h+1, k-i-j) differs from slot 52 "
      "e(v+k+i+j, h, k-i-j) in the first-interval length",
      "case ij_lt_k_i_odd item (iv): forced constituent e(v+2k+i+2j, h+1, k-i-j) differs from slot 45 "
      "e(v+2k+i+2j, h, k-h) in both parameters",
      "case ij_lt_k_i_odd item (v): forced constituent e(v+3k+i, h+1, k-i-j) differs from slot 49 "
      "e(v+3k+i, h, k-h) in both parameters",
  };
}

CoverAuditReport audit_interval_covers(long long k) {
  if (k < 3) throw UsageError("audit_interval_covers: k must be >= 3, got " + std::to_string(k));
  CoverAuditReport report;
  report.k = k;
  report.variance_notes = cover_variance_notes();
  for (long long i = 1; i <= k - 1; ++i) {
    for (long long j = 1; j <= k - 1; ++j) {
      for (auto& item : audit_cover_case(k, i, j)) {
        switch (item.verdict) {
          case CoverVerdict::Verified:
            ++report.verified;
            break;
          case CoverVerdict::DegenerateSkipped:
            ++report.degenerate_skipped;
            break;
          case CoverVerdict::Failed:
            ++report.failed;
            break;
        }
        report.items.push_back(std::move(item));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Multiplicity census.
// ---------------------------------------------------------------------------

namespace {

struct CensusChunk {
  std::map<KEdge, long long> multiplicity;
  // (slot number, orientation 0=forward/1=reflected) -> every produced edge.
  std::map<std::pair<int, int>, std::vector<KEdge>> per_slot;
  bool family_slots_distinct = true;
  bool edges_in_host = true;
  std::vector<std::string> violations;
};

void census_worker(long long v_begin, long long v_end, long long n, long long k,
                   const std::set<KEdge>& host_edges, CensusChunk& chunk) {
  for (long long v = v_begin; v < v_end; ++v) {
    for (long long i = 1; i <= k - 1; ++i) {
      for (long long j = 1; j <= k - 1; ++j) {
        const auto family = edge_family(v, i, j, k, n);
        std::set<KEdge> member_edges;
        for (const auto& slot : family.slots) {
          if (!slot.valid) continue;
          member_edges.insert(slot.edge);
          chunk.per_slot[{slot.formula.slot, 0}].push_back(slot.edge);
          const KEdge reflected = reflect_edge(slot.edge, v, n);
          member_edges.insert(reflected);
          chunk.per_slot[{slot.formula.slot, 1}].push_back(reflected);
        }
        // Within-family distinctness of the forward valid slots.
        std::vector<KEdge> forward = family.valid_edges;
        std::sort(forward.begin(), forward.end());
        if (std::adjacent_find(forward.begin(), forward.end()) != forward.end()) {
          chunk.family_slots_distinct = false;
          if (chunk.violations.size() < 16) {
            chunk.violations.push_back("family (v=" + std::to_string(v) + ", i=" + std::to_string(i) + ", j=" +
                                       std::to_string(j) + ") has coinciding valid slots");
          }
        }
        for (const auto& edge : member_edges) {
          chunk.multiplicity[edge] += 1;
          if (!host_edges.count(edge)) {
            chunk.edges_in_host = false;
            if (chunk.violations.size() < 16) {
              chunk.violations.push_back("family (v=" + std::to_string(v) + ", i=" + std::to_string(i) + ", j=" +
                                         std::to_string(j) + ") contains a non-host edge");
            }
          }
        }
      }
    }
  }
}

}  // namespace

MultiplicityReport multiplicity_census(long long n, long long k, int threads) {
  if (threads < 1) throw UsageError("multiplicity_census: threads must be >= 1");
  if (n < 12 * k) {
    throw UsageError("multiplicity_census: n must be >= 12k (" + std::to_string(12 * k) + "), got " +
                     std::to_string(n));
  }
  const auto host = build_double_interval(n, k);
  const std::set<KEdge> host_edges(host.edges.begin(), host.edges.end());

  const int worker_count = static_cast<int>(std::min<long long>(threads, n));
  std::vector<CensusChunk> chunks(static_cast<std::size_t>(worker_count));
  {
    std::vector<std::thread> workers;
    const long long per = (n + worker_count - 1) / worker_count;
    for (int w = 0; w < worker_count; ++w) {
      const long long begin = std::min<long long>(n, w * per);
      const long long end = std::min<long long>(n, begin + per);
      workers.emplace_back(census_worker, begin, end, n, k, std::cref(host_edges),
                           std::ref(chunks[static_cast<std::size_t>(w)]));
    }
    for (auto& worker : workers) worker.join();
  }

  MultiplicityReport report;
  report.n = n;
  report.k = k;
  report.families = n * (k - 1) * (k - 1);

  std::map<KEdge, long long> multiplicity;
  std::map<std::pair<int, int>, std::vector<KEdge>> per_slot;
  for (auto& chunk : chunks) {
    for (auto& [edge, count] : chunk.multiplicity) multiplicity[edge] += count;
    for (auto& [slot, edges] : chunk.per_slot) {
      auto& bucket = per_slot[slot];
      bucket.insert(bucket.end(), edges.begin(), edges.end());
    }
    report.family_slots_distinct = report.family_slots_distinct && chunk.family_slots_distinct;
    report.edges_in_host = report.edges_in_host && chunk.edges_in_host;
    for (auto& violation : chunk.violations) {
      if (report.violations.size() < 32) report.violations.push_back(std::move(violation));
    }
  }

  for (auto& [slot, edges] : per_slot) {
    std::sort(edges.begin(), edges.end());
    const bool disjoint = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    auto [entry, inserted] = report.slot_disjoint.try_emplace(slot.first, true);
    entry->second = entry->second && disjoint;
    if (!disjoint) {
      report.slot_maps_injective = false;
      if (report.violations.size() < 32) {
        report.violations.push_back("slot " + std::to_string(slot.first) +
                                    (slot.second ? " (reflected)" : " (forward)") +
                                    " produces the same edge for two distinct families");
      }
    }
  }

  report.distinct_edges = static_cast<long long>(multiplicity.size());
  for (const auto& [edge, count] : multiplicity) {
    report.histogram[count] += 1;
    report.max_multiplicity = std::max(report.max_multiplicity, count);
  }
  return report;
}

}  // namespace edgesum
