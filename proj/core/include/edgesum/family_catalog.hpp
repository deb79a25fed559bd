#pragma once

// Catalog of the 55 companion edges E(v, i, j) attached to a base edge
// e(v, i, j) of the double-interval hypergraph, split into four parameter
// cases; reflected families E^-(v, i, j); the vertex family E(v); audits of
// the interval-cover identities items (i)..(v); and the edge-multiplicity
// census showing every edge lies in at most 110 families.
//
// The slot table is transcribed verbatim into `slot_formulas`.  The cover
// audit verifies the tiling identities against constituent lists that are
// forced by the tilings themselves; where a forced constituent differs from
// the corresponding slot-table entry (or has none), the variance is reported
// as data (`matches_slot_table`, `variance_notes`), never patched silently.

#include "edgesum/cyclic.hpp"

#include <map>
#include <string>
#include <vector>

namespace edgesum {

/// Which of the four parameter regimes (i, j) falls in.  The four tags
/// partition [1, k-1]^2.
enum class CaseTag {
  ij_ge_k_i_ge_j,  // i + j >= k and i >= j   (slots 1..12)
  ij_ge_k_j_lt_i,  // i + j >= k and i <  j   (slots 13..25)
  ij_lt_k_i_even,  // i + j <  k and i even   (slots 26..40), h = i/2
  ij_lt_k_i_odd,   // i + j <  k and i odd    (slots 41..55), h = (i-1)/2
};

std::string to_string(CaseTag tag);

/// Case selection; throws UsageError unless i, j, k are in range.
CaseTag case_of(long long i, long long j, long long k);

/// One slot of the catalog: the edge e(v + offset, a, b) with `slot` the
/// global slot number in 1..55.  Offsets and parameters are plain integers
/// (functions of i, j, k); nothing is reduced mod n here.
struct SlotFormula {
  int slot = 0;
  long long offset = 0;
  long long a = 0;
  long long b = 0;
};

/// The case's slot list with global numbering (12, 13, 15 or 15 entries).
std::vector<SlotFormula> slot_formulas(long long i, long long j, long long k);

/// A slot instantiated at a base vertex: `valid` iff both parameters lie in
/// [1, k-1]; `edge` is materialized only for valid slots.
struct SlotEdge {
  SlotFormula formula;
  bool valid = false;
  KEdge edge;
};

/// The edge family E(v, i, j): every slot of the case, instantiated at v.
struct EdgeFamily {
  long long v = 0, i = 0, j = 0, k = 0, n = 0;
  CaseTag tag = CaseTag::ij_ge_k_i_ge_j;
  std::vector<SlotEdge> slots;
  std::vector<KEdge> valid_edges;  // edges of the valid slots, in slot order
};

/// Builds E(v, i, j).  Preconditions: i, j in [1, k-1] and n >= 12k (the
/// catalog spans offsets up to ~6k on either side of v, so smaller n would
/// let slots wrap into each other); violations raise UsageError.
EdgeFamily edge_family(long long v, long long i, long long j, long long k, long long n);

/// Reflection through v: vertex x maps to 2v - x (mod n).
KEdge reflect_edge(const KEdge& edge, long long v, long long n);

/// The reflected family E^-(v, i, j): reflections of the valid edges.
std::vector<KEdge> reflected_valid_edges(const EdgeFamily& family);

/// The vertex family E(v): union over all i, j in [1, k-1] of the valid
/// edges of E(v, i, j) and their reflections; sorted, distinct.
/// (k-1)^2 <= |E(v)| <= 2 * 15 * (k-1)^2.
std::vector<KEdge> vertex_family(long long v, long long k, long long n);

// ---------------------------------------------------------------------------
// Cover audit: items (i)..(v).
//
//   (i)   two edges tile [v, v+2k-1];
//   (ii)  three edges tile [v, v+3k-1];
//   (iii) four edges tile [v, v+4k-1];
//   (iv)  four edges plus the interval I = [v+i, v+i+j-1] tile [v, v+4k+j-1];
//   (v)   five edges cover [v, v+5k-j-1], exactly one pair of them meets,
//         and that intersection is exactly I.
// ---------------------------------------------------------------------------

enum class CoverVerdict { Verified, DegenerateSkipped, Failed };

std::string to_string(CoverVerdict verdict);

/// One constituent edge e(v + offset, a, b) of a cover identity.
struct CoverConstituent {
  long long offset = 0, a = 0, b = 0;
  bool matches_slot_table = true;  // false: differs from / absent in the slot table
  int slot_ref = 0;                // nearest slot-table entry (0 = none)
  bool degenerate = false;         // a or b outside [1, k-1]
};

struct CoverItemResult {
  long long i = 0, j = 0;
  int item = 1;  // 1..5
  CaseTag tag = CaseTag::ij_ge_k_i_ge_j;
  CoverVerdict verdict = CoverVerdict::Failed;
  std::vector<CoverConstituent> constituents;
  long long target_lo = 0, target_hi = 0;  // inclusive, relative to v
  bool uses_extra_interval = false;        // item 4 only
  int pair_first = -1, pair_second = -1;   // item 5: designated intersecting pair
  std::vector<long long> offending;        // mis-covered points (Failed; capped)
};

/// Audits one (i, j) pair: the five items in order.
std::vector<CoverItemResult> audit_cover_case(long long k, long long i, long long j);

struct CoverAuditReport {
  long long k = 0;
  std::vector<CoverItemResult> items;  // 5 * (k-1)^2 entries, (i, j, item) each exactly once
  long long verified = 0;
  long long degenerate_skipped = 0;
  long long failed = 0;
  std::vector<std::string> variance_notes;  // constituents differing from the slot table
};

/// Audits every (i, j) in [1, k-1]^2.  Precondition: k >= 3.
CoverAuditReport audit_interval_covers(long long k);

/// The fixed notes describing where forced cover constituents differ from
/// the slot table (independent of k; also embedded in every audit report).
std::vector<std::string> cover_variance_notes();

// ---------------------------------------------------------------------------
// Multiplicity census.
// ---------------------------------------------------------------------------

struct MultiplicityReport {
  long long n = 0, k = 0;
  long long families = 0;           // n * (k-1)^2
  long long distinct_edges = 0;     // edges appearing in at least one family
  long long max_multiplicity = 0;   // max #families containing a fixed edge
  std::map<long long, long long> histogram;  // multiplicity -> #edges
  bool family_slots_distinct = true;  // valid slots of each family pairwise distinct
  bool slot_maps_injective = true;    // each (slot, orientation) map (v,i,j) -> edge is injective
  bool edges_in_host = true;          // every family edge is a double-interval edge
  // Per-slot verdicts: slot number -> whether the map (v,i,j) -> edge is
  // injective in both orientations.  Keys are the slots that instantiate at
  // least one valid edge for this (n, k).  Slots 30/45 (offset 2k+i+2j) and
  // 34/49 (offset 3k+i) place the interval pair (h, k-h), which does not
  // determine j, so they are genuinely non-injective once two j values are
  // admissible for the same i (k >= 5 even-i, k >= 6 odd-i).
  std::map<int, bool> slot_disjoint;
  std::vector<std::string> violations;  // capped descriptions of any failures
};

/// Counts, for every edge, the number of families E(v,i,j) u E^-(v,i,j)
/// containing it (each family counted once).  Preconditions: k >= 2,
/// n >= 12k.  `threads` >= 1 parallelizes over base vertices; results are
/// deterministic and thread-count independent.
MultiplicityReport multiplicity_census(long long n, long long k, int threads = 1);

}  // namespace edgesum
