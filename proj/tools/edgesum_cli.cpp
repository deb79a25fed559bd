// edgesum: command-line front door for the exact double-interval toolkit.
//
// One command per invocation; every run writes a structured JSON report
// under <root>/<command>/<timestamp>-<input hash>/report.json and prints the
// headline verdicts plus the report path.  All verdict values are exact
// (integers as decimal strings, rationals as "p/q"); no floating point.
//
// Exit codes: 0 success (including negative mathematical findings),
// 2 usage error, 3 an audit found a discrepancy, 4 search budget exhausted.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgesum/assignment.hpp"
#include "edgesum/averaging.hpp"
#include "edgesum/constants.hpp"
#include "edgesum/errors.hpp"
#include "edgesum/family_catalog.hpp"
#include "edgesum/hypergraph.hpp"
#include "edgesum/oracle.hpp"
#include "edgesum/rational.hpp"
#include "edgesum/report.hpp"
#include "edgesum/sumset.hpp"
#include "edgesum/sweep.hpp"

namespace {

using Json = nlohmann::ordered_json;
using edgesum::Assignment;
using edgesum::BigInt;
using edgesum::Rat;
using edgesum::UsageError;

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDiscrepancy = 3;
constexpr int kExitBudget = 4;

const char* kSynopsis =
    R"(edgesum: exact toolkit for double-interval hypergraphs and nonnegative edge sums

usage: edgesum <command> [arguments]

commands
  construct      build a host hypergraph and check its shape
  audit-covers   audit the interval-cover identities for one k (or one --i/--j pair)
  census         edge-multiplicity census of the family catalog on H_{n,k};
                 with --i and --j: the single pair count p(i,j)
  count          count nonnegative edges of an assignment on a host
  oracle         exact minimum nonnegative-edge count and threshold verdict
  averaging      permutation expectation: --exact, --formula, or --mc
  sumset         cyclic sumset audits: kneser | kneser-random | growth |
                 grynkiewicz | all (default all)
  reproduce      rerun a named example: three-heavy | star | tight-cycle-k3 |
                 five-heavy | five-heavy-sweep | matching-min | complete-min

host selection (construct, count, oracle, averaging)
  --double-interval   H_{n,k} (default)              needs --n --k
  --complete          complete k-uniform host        needs --n --k
  --tight-cycle       cyclic length-k intervals      needs --n --k
  --matching          t disjoint edges               needs --k and --t (or --n = t*k)
  --family NAME       the same choice by name

flags
  --n --k --t --i --j   integer parameters
  --eps0 .. --eps5      constant overrides, exact fractions (e.g. "1/100")
  --seed --samples      randomized-run controls
  --budget N            search node budget (default 200000)
  --threads N           worker threads inside the command (default 1)
  --assignment FILE     vertex values, one integer or "p/q" per line
  --collect-edges       include edge lists in the report
  --out DIR             report root (default $EDGESUM_REPORT_DIR or ./reports)
  --help                this text

exit codes: 0 success or recorded finding, 2 usage error,
3 audit found a discrepancy, 4 search budget exhausted
)";

// ---------------------------------------------------------------------------
// Argument parsing.
// ---------------------------------------------------------------------------

struct CliArgs {
  std::string command;
  std::vector<std::string> positional;
  std::map<std::string, std::string> values;
  std::set<std::string> switches;

  bool has(const std::string& flag) const { return values.count(flag) != 0; }
  bool on(const std::string& flag) const { return switches.count(flag) != 0; }
};

const std::set<std::string>& value_flags() {
  static const std::set<std::string> flags = {
      "n",    "k",      "t",       "i",       "j",    "seed", "samples", "budget",
      "threads", "out", "assignment", "family", "eps0", "eps1", "eps2", "eps3",
      "eps4", "eps5"};
  return flags;
}

const std::set<std::string>& switch_flags() {
  static const std::set<std::string> flags = {"collect-edges", "exact",       "formula",
                                              "mc",            "matching",    "tight-cycle",
                                              "complete",      "double-interval", "help"};
  return flags;
}

CliArgs parse_args(int argc, char** argv) {
  CliArgs args;
  if (argc >= 2) args.command = argv[1];
  for (int pos = 2; pos < argc; ++pos) {
    std::string token = argv[pos];
    if (token.rfind("--", 0) != 0) {
      args.positional.push_back(token);
      continue;
    }
    std::string name = token.substr(2);
    std::optional<std::string> inline_value;
    if (auto eq = name.find('='); eq != std::string::npos) {
      inline_value = name.substr(eq + 1);
      name = name.substr(0, eq);
    }
    if (switch_flags().count(name)) {
      if (inline_value) throw UsageError("flag --" + name + " takes no value");
      args.switches.insert(name);
      continue;
    }
    if (value_flags().count(name)) {
      if (args.values.count(name)) throw UsageError("flag --" + name + " given twice");
      if (inline_value) {
        args.values[name] = *inline_value;
      } else {
        if (pos + 1 >= argc) throw UsageError("flag --" + name + " expects a value");
        args.values[name] = argv[++pos];
      }
      continue;
    }
    throw UsageError("unknown flag --" + name);
  }
  return args;
}

long long parse_integer(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw UsageError("flag --" + flag + " expects an integer, got \"" + text + "\"");
  }
}

std::optional<long long> get_integer(const CliArgs& args, const std::string& flag) {
  auto it = args.values.find(flag);
  if (it == args.values.end()) return std::nullopt;
  return parse_integer(it->second, flag);
}

long long require_integer(const CliArgs& args, const std::string& flag) {
  auto value = get_integer(args, flag);
  if (!value) throw UsageError(args.command + " needs --" + flag);
  return *value;
}

long long integer_or(const CliArgs& args, const std::string& flag, long long fallback) {
  auto value = get_integer(args, flag);
  return value ? *value : fallback;
}

std::uint64_t seed_or(const CliArgs& args, std::uint64_t fallback) {
  auto it = args.values.find("seed");
  if (it == args.values.end()) return fallback;
  try {
    std::size_t used = 0;
    unsigned long long value = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw UsageError("flag --seed expects a nonnegative integer, got \"" + it->second + "\"");
  }
}

int threads_or(const CliArgs& args, int fallback) {
  long long threads = integer_or(args, "threads", fallback);
  if (threads < 1) throw UsageError("--threads must be at least 1");
  if (threads > 1024) throw UsageError("--threads must be at most 1024");
  return static_cast<int>(threads);
}

// ---------------------------------------------------------------------------
// Constants table with --eps<idx> overrides.
// ---------------------------------------------------------------------------

edgesum::ConstantsTable constants_from_args(const CliArgs& args) {
  auto table = edgesum::default_constants();
  for (int idx = 0; idx <= 5; ++idx) {
    std::string name = "eps" + std::to_string(idx);
    auto it = args.values.find(name);
    if (it != args.values.end()) {
      edgesum::set_constant(table, name, edgesum::parse_fraction(it->second));
    }
  }
  return table;
}

Json json_constant_overrides(const edgesum::ConstantsTable& table) {
  Json overrides = Json::array();
  for (const auto& [name, value] : edgesum::constant_overrides(table)) {
    overrides.push_back(Json{{"name", name}, {"value", value}});
  }
  return overrides;
}

// ---------------------------------------------------------------------------
// Host selection.
// ---------------------------------------------------------------------------

std::string family_from_args(const CliArgs& args) {
  std::string family = "double-interval";
  int chosen = 0;
  for (const char* name : {"double-interval", "complete", "matching", "tight-cycle"}) {
    if (args.on(name)) {
      family = name;
      ++chosen;
    }
  }
  if (auto it = args.values.find("family"); it != args.values.end()) {
    family = it->second;
    ++chosen;
  }
  if (chosen > 1) {
    throw UsageError(
        "pick at most one host family (--double-interval, --complete, --matching, "
        "--tight-cycle, or --family NAME)");
  }
  return family;
}

long long matching_t(const CliArgs& args, long long k) {
  auto t = get_integer(args, "t");
  auto n = get_integer(args, "n");
  if (t && n && *n != *t * k) {
    throw UsageError("--matching with --t " + std::to_string(*t) + " and --k " +
                     std::to_string(k) + " has " + std::to_string(*t * k) +
                     " vertices; --n " + std::to_string(*n) + " contradicts that");
  }
  if (t) return *t;
  if (n) {
    if (k <= 0 || *n % k != 0) {
      throw UsageError("--matching derives t from --n only when k divides n; got n = " +
                       std::to_string(*n) + ", k = " + std::to_string(k));
    }
    return *n / k;
  }
  throw UsageError("--matching needs --t (or --n = t*k)");
}

struct HostChoice {
  edgesum::UniformHypergraph host;
  Json inputs;  // family plus the parameters that selected it
};

HostChoice host_from_args(const CliArgs& args) {
  const std::string family = family_from_args(args);
  const long long k = require_integer(args, "k");
  HostChoice choice;
  choice.inputs["family"] = family;
  if (family == "matching") {
    const long long t = matching_t(args, k);
    choice.inputs["t"] = t;
    choice.inputs["k"] = k;
    choice.inputs["n"] = t * k;
    choice.host = edgesum::build_matching(t, k);
    return choice;
  }
  const long long n = require_integer(args, "n");
  choice.inputs["n"] = n;
  choice.inputs["k"] = k;
  if (family == "double-interval") {
    choice.host = edgesum::build_double_interval(n, k);
  } else if (family == "complete") {
    choice.host = edgesum::build_complete(n, k);
  } else if (family == "tight-cycle") {
    choice.host = edgesum::build_tight_cycle(n, k);
  } else {
    throw UsageError("unknown host family \"" + family +
                     "\"; choose double-interval, complete, matching, or tight-cycle");
  }
  return choice;
}

// ---------------------------------------------------------------------------
// Assignment selection.
// ---------------------------------------------------------------------------

std::string known_assignment_kinds() {
  std::string kinds;
  for (const auto& kind : edgesum::example_assignment_kinds()) {
    if (!kinds.empty()) kinds += ", ";
    kinds += kind;
  }
  return kinds;
}

Assignment assignment_from_file(const std::string& path, long long n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open assignment file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Assignment f = edgesum::parse_assignment_text(buffer.str());
  if (static_cast<long long>(f.size()) != n) {
    throw UsageError("assignment file \"" + path + "\" has " + std::to_string(f.size()) +
                     " values but the host has " + std::to_string(n) + " vertices");
  }
  return f;
}

// Resolves the assignment for `count` / `averaging`: a positional example
// kind, an --assignment file, or (when allowed) the star default.
Assignment resolve_assignment(const CliArgs& args, const edgesum::UniformHypergraph& host,
                              bool default_star, Json& inputs) {
  const bool from_file = args.has("assignment");
  const bool from_kind = !args.positional.empty();
  if (from_file && from_kind) {
    throw UsageError("give either an example kind or --assignment FILE, not both");
  }
  if (from_kind) {
    if (args.positional.size() > 1) {
      throw UsageError("expected at most one positional argument (an example kind)");
    }
    const std::string& kind = args.positional.front();
    inputs["assignment"] = Json{{"kind", kind}};
    return edgesum::example_assignment(kind, host.n, host.k);
  }
  if (from_file) {
    const std::string& path = args.values.at("assignment");
    inputs["assignment"] = Json{{"file", path}};
    return assignment_from_file(path, host.n);
  }
  if (default_star) {
    inputs["assignment"] = Json{{"kind", "star"}};
    return edgesum::example_assignment("star", host.n, host.k);
  }
  throw UsageError("count needs an assignment: a positional example kind (" +
                   known_assignment_kinds() + ") or --assignment FILE");
}

// ---------------------------------------------------------------------------
// JSON rendering helpers (exact values only: decimal strings and "p/q").
// ---------------------------------------------------------------------------

Json json_assignment_values(const Assignment& f) {
  Json values = Json::array();
  for (const Rat& value : f) values.push_back(edgesum::to_fraction_string(value));
  return values;
}

Json json_edge_list(const std::vector<edgesum::KEdge>& edges) {
  Json out = Json::array();
  for (const auto& edge : edges) out.push_back(edge.vertices);
  return out;
}

Json json_min_nonnegative(const edgesum::MinNonnegative& min) {
  Json out;
  out["exact"] = min.exact;
  out["lower"] = min.lower.str();
  out["upper"] = min.upper.str();
  out["method"] = min.method;
  out["nodes_explored"] = min.nodes_explored;
  out["lp_solves"] = min.lp_solves;
  out["budget_exhausted"] = min.budget_exhausted;
  return out;
}

Json json_sumset_sweep(const edgesum::SumsetSweep& sweep) {
  Json out;
  out["checks"] = sweep.checks;
  out["failures"] = sweep.failures;
  if (sweep.first_failure) out["first_failure"] = *sweep.first_failure;
  return out;
}

Json json_grynkiewicz_sweep(const edgesum::GrynkiewiczSweep& sweep) {
  Json out;
  out["checks"] = sweep.checks;
  out["failures"] = sweep.failures;
  out["prefix_only"] = sweep.prefix_only;
  out["restriction_only"] = sweep.restriction_only;
  out["both_branches"] = sweep.both_branches;
  out["incomplete_searches"] = sweep.incomplete_searches;
  if (sweep.first_failure) out["first_failure"] = *sweep.first_failure;
  return out;
}

Json json_growth_sweep(const edgesum::GrowthSweep& sweep) {
  Json out;
  out["k_max"] = sweep.k_max;
  out["eps3"] = edgesum::to_fraction_string(sweep.eps3);
  out["eps4"] = edgesum::to_fraction_string(sweep.eps4);
  out["pairs_tested"] = sweep.pairs_tested;
  out["failures"] = sweep.failures;
  out["ties"] = sweep.ties;
  if (sweep.first_failure) out["first_failure"] = *sweep.first_failure;
  return out;
}

Json json_special_pair_entry(const edgesum::SpecialPairEntry& entry) {
  Json out;
  out["k"] = entry.k;
  out["n"] = entry.n;
  out["p_near"] = entry.p_near.str();
  out["p_far"] = entry.p_far.str();
  out["condition_near"] = entry.condition_near.str();
  out["pair_route_total"] = entry.pair_route_total.str();
  out["assignment_route_total"] = entry.assignment_route_total.str();
  out["degree"] = entry.degree.str();
  out["far_is_k_minus_1"] = entry.far_is_k_minus_1;
  out["routes_agree"] = entry.routes_agree;
  out["below_degree"] = entry.below_degree;
  return out;
}

// ---------------------------------------------------------------------------
// Report emission.
// ---------------------------------------------------------------------------

std::filesystem::path report_root(const CliArgs& args) {
  auto it = args.values.find("out");
  if (it != args.values.end()) return std::filesystem::path(it->second);
  return edgesum::default_report_root();
}

int emit(const CliArgs& args, edgesum::Report& report, int exit_code,
         const std::vector<std::string>& lines) {
  const auto run_dir = edgesum::write_report(report, report_root(args));
  for (const auto& line : lines) std::cout << line << "\n";
  std::cout << "report: " << (run_dir / "report.json").string() << "\n";
  return exit_code;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

int run_construct(const CliArgs& args) {
  HostChoice choice = host_from_args(args);
  const auto& host = choice.host;
  const bool collect = args.on("collect-edges");

  edgesum::Report report;
  report.command = "construct";
  report.inputs = choice.inputs;
  report.inputs["collect_edges"] = collect;
  report.inputs["constant_overrides"] = json_constant_overrides(constants_from_args(args));

  // Expected shape per family: edge count and (regular) degree.
  BigInt expected_edges;
  BigInt expected_degree;
  if (host.label == "double-interval") {
    expected_edges = BigInt(host.n) * (host.k - 1) * (host.k - 1);
    expected_degree = BigInt(host.k) * (host.k - 1) * (host.k - 1);
  } else if (host.label == "complete") {
    expected_edges = edgesum::binomial(host.n, host.k);
    expected_degree = edgesum::binomial(host.n - 1, host.k - 1);
  } else if (host.label == "tight-cycle") {
    expected_edges = host.n;
    expected_degree = host.k;
  } else {  // matching
    expected_edges = BigInt(host.n / host.k);
    expected_degree = 1;
  }

  bool degree_matches = false;
  if (host.lazy_complete) {
    degree_matches = true;  // every vertex lies in C(n-1, k-1) edges by definition
  } else {
    const long long regular = edgesum::regular_degree(host);
    degree_matches = regular >= 0 && BigInt(regular) == expected_degree;
  }
  const bool edges_match = host.edge_count() == expected_edges;

  report.results["hypergraph"] = edgesum::export_hypergraph(host, collect);
  if (!host.lazy_complete) {
    report.results["degree_profile"] = edgesum::degree_profile_summary(host);
  }
  report.results["min_degree"] =
      host.lazy_complete ? expected_degree.str() : BigInt(edgesum::min_degree(host)).str();

  report.verdicts["expected_edge_count"] = expected_edges.str();
  report.verdicts["expected_degree"] = expected_degree.str();
  report.verdicts["edge_count_matches"] = edges_match;
  report.verdicts["regular_with_expected_degree"] = degree_matches;

  const bool ok = edges_match && degree_matches;
  std::vector<std::string> lines;
  lines.push_back("constructed " + host.label + " host: n = " + std::to_string(host.n) +
                  ", k = " + std::to_string(host.k) + ", edges = " + host.edge_count().str());
  lines.push_back("shape check (edges " + expected_edges.str() + ", degree " +
                  expected_degree.str() + "): " + (ok ? "ok" : "MISMATCH"));
  return emit(args, report, ok ? kExitSuccess : kExitDiscrepancy, lines);
}

// ---------------------------------------------------------------------------
// audit-covers
// ---------------------------------------------------------------------------

Json json_cover_item(const edgesum::CoverItemResult& item) {
  Json out;
  out["i"] = item.i;
  out["j"] = item.j;
  out["item"] = item.item;
  out["case"] = edgesum::to_string(item.tag);
  out["verdict"] = edgesum::to_string(item.verdict);
  if (!item.offending.empty()) out["offending"] = item.offending;
  return out;
}

int run_audit_covers(const CliArgs& args) {
  const long long k = require_integer(args, "k");

  edgesum::Report report;
  report.command = "audit-covers";
  report.inputs["k"] = k;
  report.inputs["constant_overrides"] = json_constant_overrides(constants_from_args(args));

  // With --i/--j: audit that single pair; otherwise the full [1,k-1]^2 grid.
  const auto i = get_integer(args, "i");
  const auto j = get_integer(args, "j");
  if (i.has_value() != j.has_value()) {
    throw UsageError("audit-covers takes --i and --j together (or neither)");
  }

  std::vector<edgesum::CoverItemResult> items;
  if (i) {
    report.inputs["i"] = *i;
    report.inputs["j"] = *j;
    items = edgesum::audit_cover_case(k, *i, *j);
    report.results["variance_notes"] = edgesum::cover_variance_notes();
  } else {
    edgesum::CoverAuditReport audit = edgesum::audit_interval_covers(k);
    items = std::move(audit.items);
    report.results["variance_notes"] = audit.variance_notes;
  }

  long long verified = 0, degenerate = 0, failed = 0;
  Json degenerate_items = Json::array();
  Json failed_items = Json::array();
  for (const auto& item : items) {
    switch (item.verdict) {
      case edgesum::CoverVerdict::Verified:
        ++verified;
        break;
      case edgesum::CoverVerdict::DegenerateSkipped:
        ++degenerate;
        degenerate_items.push_back(json_cover_item(item));
        break;
      case edgesum::CoverVerdict::Failed:
        ++failed;
        failed_items.push_back(json_cover_item(item));
        break;
    }
  }

  report.results["items_total"] = static_cast<long long>(items.size());
  report.results["verified"] = verified;
  report.results["degenerate_skipped"] = degenerate;
  report.results["failed"] = failed;
  report.results["degenerate_items"] = std::move(degenerate_items);
  report.results["failed_items"] = std::move(failed_items);

  report.verdicts["all_nondegenerate_verified"] = failed == 0;
  report.verdicts["degenerate_cases_enumerated"] = true;

  std::vector<std::string> lines;
  lines.push_back("cover audit k = " + std::to_string(k) + ": " + std::to_string(verified) +
                  " verified, " + std::to_string(degenerate) + " degenerate-skipped, " +
                  std::to_string(failed) + " failed (of " + std::to_string(items.size()) +
                  " items)");
  return emit(args, report, failed == 0 ? kExitSuccess : kExitDiscrepancy, lines);
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

int run_census(const CliArgs& args) {
  const long long n = require_integer(args, "n");
  const long long k = require_integer(args, "k");
  const auto table = constants_from_args(args);

  edgesum::Report report;
  report.command = "census";
  report.inputs["n"] = n;
  report.inputs["k"] = k;
  report.inputs["constant_overrides"] = json_constant_overrides(table);

  // Single-pair mode: p(i, j) on H_{n,k} plus the symmetry cross-check.
  const auto i = get_integer(args, "i");
  const auto j = get_integer(args, "j");
  if (i.has_value() != j.has_value()) {
    throw UsageError("census takes --i and --j together (or neither)");
  }
  if (i) {
    report.inputs["i"] = *i;
    report.inputs["j"] = *j;
    const auto host = edgesum::build_double_interval(n, k);
    const auto forward = edgesum::pair_multiplicity(host, *i, *j);
    const auto backward = edgesum::pair_multiplicity(host, *j, *i);
    report.results["pair_count"] = forward.count.str();
    report.verdicts["symmetric"] = forward.count == backward.count;
    std::vector<std::string> lines;
    lines.push_back("p(" + std::to_string(*i) + ", " + std::to_string(*j) + ") on H_{" +
                    std::to_string(n) + "," + std::to_string(k) + "} = " + forward.count.str());
    const bool ok = forward.count == backward.count;
    return emit(args, report, ok ? kExitSuccess : kExitDiscrepancy, lines);
  }

  const int threads = threads_or(args, 1);
  report.inputs["threads"] = threads;
  const edgesum::MultiplicityReport census = edgesum::multiplicity_census(n, k, threads);

  Json histogram = Json::object();
  for (const auto& [multiplicity, edges] : census.histogram) {
    histogram[std::to_string(multiplicity)] = edges;
  }
  Json slot_disjointness = Json::object();
  std::vector<int> non_disjoint_slots;
  for (const auto& [slot, disjoint] : census.slot_disjoint) {
    slot_disjointness[std::to_string(slot)] = disjoint;
    if (!disjoint) non_disjoint_slots.push_back(slot);
  }
  report.results["families"] = census.families;
  report.results["distinct_edges"] = census.distinct_edges;
  report.results["max_multiplicity"] = census.max_multiplicity;
  report.results["histogram"] = std::move(histogram);
  report.results["family_slots_distinct"] = census.family_slots_distinct;
  report.results["slot_disjointness"] = std::move(slot_disjointness);
  report.results["non_disjoint_slots"] = non_disjoint_slots;
  report.results["violations"] = census.violations;

  // Exit 3 tracks the two audited claims -- the multiplicity bound C1 and the
  // per-slot disjointness -- plus host membership.  Within-family slot
  // coincidences (family_slots_distinct) are reported but are not a claim
  // anywhere: a family is a set, so a merged slot only shrinks it.
  const Rat c1 = edgesum::get_constant(table, "C1");
  const bool below_c1 = Rat(census.max_multiplicity) <= c1;
  report.verdicts["c1"] = edgesum::to_fraction_string(c1);
  report.verdicts["max_multiplicity_le_c1"] = below_c1;
  report.verdicts["slots_pairwise_disjoint"] = census.slot_maps_injective;
  report.verdicts["edges_in_host"] = census.edges_in_host;

  std::vector<std::string> lines;
  lines.push_back("census H_{" + std::to_string(n) + "," + std::to_string(k) + "}: " +
                  std::to_string(census.families) + " families, " +
                  std::to_string(census.distinct_edges) + " distinct edges, max multiplicity " +
                  std::to_string(census.max_multiplicity) + " (bound " +
                  edgesum::to_fraction_string(c1) + ": " + yes_no(below_c1) + ")");
  std::string slot_line = "slot maps pairwise disjoint: " + yes_no(census.slot_maps_injective);
  if (!non_disjoint_slots.empty()) {
    slot_line += " (slots";
    for (int slot : non_disjoint_slots) slot_line += " " + std::to_string(slot);
    slot_line += " share edges across families)";
  }
  lines.push_back(std::move(slot_line));
  if (!census.family_slots_distinct) {
    lines.push_back("note: some families list one edge under two slots (k = 2j coincidence)");
  }
  const bool ok = below_c1 && census.slot_maps_injective && census.edges_in_host;
  return emit(args, report, ok ? kExitSuccess : kExitDiscrepancy, lines);
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int run_count(const CliArgs& args) {
  HostChoice choice = host_from_args(args);
  const auto& host = choice.host;
  const bool collect = args.on("collect-edges");

  edgesum::Report report;
  report.command = "count";
  report.inputs = choice.inputs;
  Assignment f = resolve_assignment(args, host, /*default_star=*/false, report.inputs);
  report.inputs["collect_edges"] = collect;
  report.inputs["constant_overrides"] = json_constant_overrides(constants_from_args(args));

  const edgesum::NonnegativityReport counted = edgesum::count_nonnegative(f, host, collect);

  report.results["assignment_values"] = json_assignment_values(f);
  report.results["total_sum"] = edgesum::to_fraction_string(edgesum::total_sum(f));
  report.results["nonnegative_count"] = counted.nonnegative_count.str();
  report.results["negative_count"] = counted.negative_count.str();
  report.results["min_degree"] = counted.threshold;
  if (counted.nonnegative_edges) {
    report.results["nonnegative_edges"] = json_edge_list(*counted.nonnegative_edges);
  }

  const bool meets = counted.nonnegative_count >= counted.threshold;
  report.verdicts["meets_min_degree"] = meets;

  std::vector<std::string> lines;
  lines.push_back("nonnegative edges: " + counted.nonnegative_count.str() + " of " +
                  host.edge_count().str() + " on " + host.label + " host (min degree " +
                  std::to_string(counted.threshold) + ")");
  lines.push_back("meets min degree: " + yes_no(meets));
  return emit(args, report, kExitSuccess, lines);
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int run_oracle(const CliArgs& args) {
  HostChoice choice = host_from_args(args);
  const auto& host = choice.host;
  const long long budget = integer_or(args, "budget", 200000);
  const std::uint64_t seed = seed_or(args, 1);

  edgesum::Report report;
  report.command = "oracle";
  report.inputs = choice.inputs;
  report.inputs["budget"] = budget;
  report.inputs["seed"] = seed;
  report.inputs["constant_overrides"] = json_constant_overrides(constants_from_args(args));

  const edgesum::ThresholdVerdict verdict = edgesum::threshold_verdict(host, budget, seed);

  report.results["min"] = json_min_nonnegative(verdict.min_count);
  report.results["delta"] = verdict.delta;
  report.results["note"] = verdict.note;

  // A reported witness must re-evaluate to the claimed bound bit-exactly.
  bool witness_ok = true;
  const edgesum::Assignment* witness = nullptr;
  if (verdict.witness) {
    witness = &*verdict.witness;
  } else if (verdict.min_count.witness) {
    witness = &*verdict.min_count.witness;
  }
  if (witness) {
    const auto recheck = edgesum::count_nonnegative(*witness, host);
    witness_ok = recheck.nonnegative_count == verdict.min_count.upper;
    report.results["witness"] = json_assignment_values(*witness);
    report.results["witness_count"] = recheck.nonnegative_count.str();
  }

  report.verdicts["status"] = edgesum::to_string(verdict.status);
  report.verdicts["witness_reevaluates"] = witness_ok;

  std::vector<std::string> lines;
  lines.push_back("threshold " + edgesum::to_string(verdict.status) + " on " + host.label +
                  " host: min in [" + verdict.min_count.lower.str() + ", " +
                  verdict.min_count.upper.str() + "], min degree " +
                  std::to_string(verdict.delta) + " (" + verdict.note + ")");
  if (witness) lines.push_back("witness re-evaluates exactly: " + yes_no(witness_ok));

  int code = kExitSuccess;
  if (!witness_ok) {
    code = kExitDiscrepancy;
  } else if (verdict.status == edgesum::ThresholdStatus::Unknown &&
             verdict.min_count.budget_exhausted) {
    code = kExitBudget;
    lines.push_back("search budget exhausted before an exact answer; bounds above are proven");
  }
  return emit(args, report, code, lines);
}

// ---------------------------------------------------------------------------
// averaging
// ---------------------------------------------------------------------------

int run_averaging(const CliArgs& args) {
  int modes = 0;
  for (const char* mode : {"exact", "formula", "mc"}) {
    if (args.on(mode)) ++modes;
  }
  if (modes > 1) throw UsageError("pick one of --exact, --formula, --mc");
  const std::string mode = args.on("formula") ? "formula" : (args.on("mc") ? "mc" : "exact");

  HostChoice choice = host_from_args(args);
  const auto& host = choice.host;

  edgesum::Report report;
  report.command = "averaging";
  report.inputs = choice.inputs;
  report.inputs["mode"] = mode;
  Assignment f = resolve_assignment(args, host, /*default_star=*/true, report.inputs);
  report.inputs["constant_overrides"] = json_constant_overrides(constants_from_args(args));

  report.results["assignment_values"] = json_assignment_values(f);
  const bool regular = edgesum::regular_degree(host) >= 0;

  std::vector<std::string> lines;
  int code = kExitSuccess;

  if (mode == "formula") {
    const Rat value = edgesum::permutation_expectation_formula(f, host);
    report.results["formula"] = edgesum::to_fraction_string(value);
    lines.push_back("closed-form expectation = " + edgesum::to_fraction_string(value));
  } else if (mode == "exact") {
    const Rat exact = edgesum::permutation_expectation_exact(f, host);
    report.results["expectation"] = edgesum::to_fraction_string(exact);
    lines.push_back("exact expectation = " + edgesum::to_fraction_string(exact));
    if (regular) {
      const Rat formula = edgesum::permutation_expectation_formula(f, host);
      report.results["formula"] = edgesum::to_fraction_string(formula);
      const bool match = exact == formula;
      report.verdicts["identity_matches_formula"] = match;
      lines.push_back("matches closed form " + edgesum::to_fraction_string(formula) + ": " +
                      yes_no(match));
      if (!match) code = kExitDiscrepancy;
    }
  } else {  // mc
    const long long samples = integer_or(args, "samples", 100000);
    const std::uint64_t seed = seed_or(args, 1);
    const int threads = threads_or(args, 1);
    report.inputs["samples"] = samples;
    report.inputs["seed"] = seed;
    report.inputs["threads"] = threads;
    const edgesum::McExpectation mc = edgesum::permutation_expectation_mc(f, host, samples, seed, threads);
    report.results["estimate"] = edgesum::to_fraction_string(mc.estimate);
    report.results["se_squared"] = edgesum::to_fraction_string(mc.se_squared);
    lines.push_back("monte-carlo estimate = " + edgesum::to_fraction_string(mc.estimate) + " (" +
                    std::to_string(samples) + " samples, seed " + std::to_string(seed) + ")");
    if (regular) {
      const Rat formula = edgesum::permutation_expectation_formula(f, host);
      const bool close = edgesum::within_standard_errors(mc.estimate, formula, mc.se_squared, 3);
      report.results["formula"] = edgesum::to_fraction_string(formula);
      report.verdicts["within_three_standard_errors"] = close;
      lines.push_back("within 3 standard errors of closed form " +
                      edgesum::to_fraction_string(formula) + ": " + yes_no(close));
    }
  }

  return emit(args, report, code, lines);
}

// ---------------------------------------------------------------------------
// sumset
// ---------------------------------------------------------------------------

int run_sumset(const CliArgs& args) {
  std::string audit = "all";
  if (!args.positional.empty()) {
    if (args.positional.size() > 1) throw UsageError("sumset takes at most one audit name");
    audit = args.positional.front();
  }
  const std::set<std::string> known = {"kneser", "kneser-random", "growth", "grynkiewicz", "all"};
  if (!known.count(audit)) {
    throw UsageError("unknown sumset audit \"" + audit +
                     "\"; choose kneser, kneser-random, growth, grynkiewicz, or all");
  }

  const auto table = constants_from_args(args);
  const int threads = threads_or(args, 1);
  const std::uint64_t seed = seed_or(args, 1);

  edgesum::Report report;
  report.command = "sumset";
  report.inputs["audit"] = audit;
  report.inputs["threads"] = threads;
  report.inputs["constant_overrides"] = json_constant_overrides(table);

  std::vector<std::string> lines;
  long long failures = 0;
  bool searches_complete = true;

  if (audit == "kneser" || audit == "all") {
    const long long k_max = (audit == "all") ? 6 : integer_or(args, "k", 6);
    if (audit != "all") report.inputs["k"] = k_max;
    const auto sweep = edgesum::kneser_exhaustive_audit(k_max, threads);
    report.results["kneser"] = json_sumset_sweep(sweep);
    report.results["kneser"]["k_max"] = k_max;
    failures += sweep.failures;
    lines.push_back("kneser exhaustive k <= " + std::to_string(k_max) + ": " +
                    std::to_string(sweep.checks) + " checks, " + std::to_string(sweep.failures) +
                    " failures");
  }
  if (audit == "kneser-random" || audit == "all") {
    const long long modulus_max = (audit == "all") ? 50 : integer_or(args, "k", 50);
    const long long trials = (audit == "all") ? 100000 : integer_or(args, "samples", 100000);
    if (audit != "all") {
      report.inputs["k"] = modulus_max;
      report.inputs["samples"] = trials;
    }
    report.inputs["seed"] = seed;
    const auto sweep = edgesum::kneser_random_audit(modulus_max, trials, seed, threads);
    report.results["kneser_random"] = json_sumset_sweep(sweep);
    report.results["kneser_random"]["modulus_max"] = modulus_max;
    report.results["kneser_random"]["trials"] = trials;
    failures += sweep.failures;
    lines.push_back("kneser random k <= " + std::to_string(modulus_max) + ", " +
                    std::to_string(trials) + " trials (seed " + std::to_string(seed) + "): " +
                    std::to_string(sweep.failures) + " failures");
  }
  if (audit == "growth" || audit == "all") {
    const long long k_max = (audit == "all") ? 8 : integer_or(args, "k", 8);
    if (audit != "all") report.inputs["k"] = k_max;
    const Rat eps3 = edgesum::get_constant(table, "eps3");
    const Rat eps4 = edgesum::get_constant(table, "eps4");
    const auto sweep = edgesum::exhaustive_growth_audit(k_max, eps3, eps4, threads);
    report.results["growth"] = json_growth_sweep(sweep);
    failures += sweep.failures;
    lines.push_back("growth exhaustive k <= " + std::to_string(k_max) + ": " +
                    std::to_string(sweep.pairs_tested) + " pairs, " +
                    std::to_string(sweep.failures) + " failures, " + std::to_string(sweep.ties) +
                    " ties");
  }
  if (audit == "grynkiewicz" || audit == "all") {
    const long long k_max = (audit == "all") ? 5 : integer_or(args, "k", 5);
    const long long t_max = (audit == "all") ? 3 : integer_or(args, "t", 3);
    if (audit != "all") {
      report.inputs["k"] = k_max;
      report.inputs["t"] = t_max;
    }
    const auto sweep = edgesum::grynkiewicz_exhaustive_audit(k_max, t_max, threads);
    report.results["grynkiewicz"] = json_grynkiewicz_sweep(sweep);
    failures += sweep.failures;
    searches_complete = searches_complete && sweep.incomplete_searches == 0;
    lines.push_back("grynkiewicz exhaustive k <= " + std::to_string(k_max) + ", t <= " +
                    std::to_string(t_max) + ": " + std::to_string(sweep.checks) + " checks, " +
                    std::to_string(sweep.failures) + " failures, " +
                    std::to_string(sweep.incomplete_searches) + " capped searches");
  }

  report.verdicts["zero_failures"] = failures == 0;
  report.verdicts["all_searches_complete"] = searches_complete;

  const bool ok = failures == 0 && searches_complete;
  lines.push_back(std::string("sumset audits: ") + (ok ? "all pass" : "FAILURES FOUND"));
  return emit(args, report, ok ? kExitSuccess : kExitDiscrepancy, lines);
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

int reproduce_three_heavy(const CliArgs& args, edgesum::Report& report,
                          std::vector<std::string>& lines) {
  const long long k = integer_or(args, "k", 3);
  const long long n = 3 * k + 1;
  report.inputs["k"] = k;
  report.inputs["n"] = n;

  const auto host = edgesum::build_complete(n, k);
  const Assignment f = edgesum::example_assignment("three_heavy", n, k);
  const auto counted = edgesum::count_nonnegative(f, host);
  const BigInt expected = edgesum::binomial(3 * k - 2, k);
  const BigInt star_bound = edgesum::binomial(n - 1, k - 1);

  report.results["nonnegative_count"] = counted.nonnegative_count.str();
  report.results["closed_form"] = expected.str();
  report.results["star_count"] = star_bound.str();

  const bool matches = counted.nonnegative_count == expected;
  const bool below = counted.nonnegative_count < star_bound;
  report.verdicts["count_matches_closed_form"] = matches;
  report.verdicts["verdict"] = below ? "below C(n-1,k-1)" : "not below C(n-1,k-1)";

  lines.push_back("three-heavy on complete host n = " + std::to_string(n) + ", k = " +
                  std::to_string(k) + ": count " + counted.nonnegative_count.str() +
                  " (closed form " + expected.str() + "), star count " + star_bound.str());
  lines.push_back("verdict: " + std::string(below ? "below C(n-1,k-1)" : "NOT below C(n-1,k-1)"));
  return (matches && below) ? kExitSuccess : kExitDiscrepancy;
}

int reproduce_star(const CliArgs& args, edgesum::Report& report,
                   std::vector<std::string>& lines) {
  const long long n = integer_or(args, "n", 8);
  const long long k = integer_or(args, "k", 3);
  report.inputs["n"] = n;
  report.inputs["k"] = k;

  const auto host = edgesum::build_complete(n, k);
  const Assignment f = edgesum::example_assignment("star", n, k);
  const auto counted = edgesum::count_nonnegative(f, host);
  const BigInt expected = edgesum::binomial(n - 1, k - 1);

  report.results["nonnegative_count"] = counted.nonnegative_count.str();
  report.results["closed_form"] = expected.str();
  const bool matches = counted.nonnegative_count == expected;
  report.verdicts["count_matches_closed_form"] = matches;

  lines.push_back("star on complete host n = " + std::to_string(n) + ", k = " +
                  std::to_string(k) + ": count " + counted.nonnegative_count.str() +
                  ", C(n-1,k-1) = " + expected.str() + " (" + yes_no(matches) + ")");
  return matches ? kExitSuccess : kExitDiscrepancy;
}

int reproduce_tight_cycle(const CliArgs& args, edgesum::Report& report,
                          std::vector<std::string>& lines) {
  const long long n = integer_or(args, "n", 10);
  report.inputs["n"] = n;
  report.inputs["k"] = 3;

  const auto host = edgesum::build_tight_cycle(n, 3);
  const Assignment f = edgesum::example_assignment("tight_cycle_k3", n, 3);
  const auto counted = edgesum::count_nonnegative(f, host);
  const long long delta = edgesum::min_degree(host);

  report.results["nonnegative_count"] = counted.nonnegative_count.str();
  report.results["delta"] = delta;
  const bool one = counted.nonnegative_count == 1;
  const bool below = counted.nonnegative_count < delta;
  report.verdicts["count_is_one"] = one;
  report.verdicts["below_delta"] = below;

  lines.push_back("tight-cycle k = 3 on n = " + std::to_string(n) + ": count " +
                  counted.nonnegative_count.str() + ", min degree " + std::to_string(delta) +
                  " (below: " + yes_no(below) + ")");
  return (one && below) ? kExitSuccess : kExitDiscrepancy;
}

int reproduce_five_heavy(const CliArgs& args, edgesum::Report& report,
                         std::vector<std::string>& lines) {
  const long long k = integer_or(args, "k", 12);
  report.inputs["k"] = k;

  const auto entry = edgesum::special_pair_check(k);
  report.results["entry"] = json_special_pair_entry(entry);
  report.verdicts["routes_agree"] = entry.routes_agree;
  report.verdicts["far_pair_count_is_k_minus_1"] = entry.far_is_k_minus_1;
  report.verdicts["below_degree"] = entry.below_degree;

  lines.push_back("five-heavy k = " + std::to_string(k) + " (n = " + std::to_string(entry.n) +
                  "): nonnegative total " + entry.pair_route_total.str() + ", degree " +
                  entry.degree.str() + " (below: " + yes_no(entry.below_degree) + ")");
  lines.push_back("independent routes agree: " + yes_no(entry.routes_agree));
  return (entry.routes_agree && entry.far_is_k_minus_1) ? kExitSuccess : kExitDiscrepancy;
}

int reproduce_five_heavy_sweep(const CliArgs& args, edgesum::Report& report,
                               std::vector<std::string>& lines) {
  const long long k_max = integer_or(args, "k", 30);
  report.inputs["k_min"] = 4;
  report.inputs["k_max"] = k_max;

  const auto sweep = edgesum::special_pair_sweep(4, k_max);
  Json entries = Json::array();
  for (const auto& entry : sweep.entries) entries.push_back(json_special_pair_entry(entry));
  report.results["entries"] = std::move(entries);
  report.verdicts["all_routes_agree"] = sweep.all_routes_agree;
  if (sweep.smallest_failing_k) {
    report.verdicts["smallest_failing_k"] = *sweep.smallest_failing_k;
  }

  lines.push_back("five-heavy sweep k = 4.." + std::to_string(k_max) + ": routes agree on all (" +
                  yes_no(sweep.all_routes_agree) + ")");
  if (sweep.smallest_failing_k) {
    lines.push_back("smallest k with nonnegative total below the degree: " +
                    std::to_string(*sweep.smallest_failing_k));
  } else {
    lines.push_back("no k in range drops below the degree");
  }
  return sweep.all_routes_agree ? kExitSuccess : kExitDiscrepancy;
}

int reproduce_matching_min(const CliArgs& args, edgesum::Report& report,
                           std::vector<std::string>& lines) {
  const long long t = integer_or(args, "t", 2);
  const long long k = integer_or(args, "k", 3);
  const long long budget = integer_or(args, "budget", 200000);
  report.inputs["t"] = t;
  report.inputs["k"] = k;
  report.inputs["budget"] = budget;

  const auto host = edgesum::build_matching(t, k);
  const auto min = edgesum::min_nonnegative_exact(host, budget);
  report.results["min"] = json_min_nonnegative(min);
  if (!min.exact) {
    lines.push_back("matching t = " + std::to_string(t) + ", k = " + std::to_string(k) +
                    ": budget exhausted, min in [" + min.lower.str() + ", " + min.upper.str() +
                    "]");
    return kExitBudget;
  }
  const bool is_one = min.lower == 1;
  report.verdicts["min_is_one"] = is_one;
  lines.push_back("matching t = " + std::to_string(t) + ", k = " + std::to_string(k) +
                  ": exact min " + min.lower.str() + " (expected 1: " + yes_no(is_one) + ")");
  return is_one ? kExitSuccess : kExitDiscrepancy;
}

int reproduce_complete_min(const CliArgs& args, edgesum::Report& report,
                           std::vector<std::string>& lines) {
  const long long n = integer_or(args, "n", 8);
  const long long k = integer_or(args, "k", 2);
  const long long budget = integer_or(args, "budget", 200000);
  report.inputs["n"] = n;
  report.inputs["k"] = k;
  report.inputs["budget"] = budget;

  const auto host = edgesum::build_complete(n, k);
  const auto min = edgesum::min_nonnegative_exact(host, budget);
  const BigInt star_bound = edgesum::binomial(n - 1, k - 1);
  report.results["min"] = json_min_nonnegative(min);
  report.results["star_bound"] = star_bound.str();
  if (!min.exact) {
    lines.push_back("complete n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                    ": budget exhausted, min in [" + min.lower.str() + ", " + min.upper.str() +
                    "]");
    return kExitBudget;
  }

  report.verdicts["matches_star_bound"] = min.lower == star_bound;
  lines.push_back("complete n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                  ": exact min " + min.lower.str() + ", C(n-1,k-1) = " + star_bound.str() +
                  " (match: " + yes_no(min.lower == star_bound) + ")");

  // Frozen pair-host values (minimum n-1, known for every n here): reproduce
  // them exactly or flag the discrepancy.
  if (k == 2) {
    const BigInt expected = BigInt(n - 1);
    const bool matches = min.lower == expected;
    report.verdicts["matches_known_value"] = matches;
    lines.push_back("known pair-host value " + expected.str() + ": " + yes_no(matches));
    return matches ? kExitSuccess : kExitDiscrepancy;
  }
  return kExitSuccess;
}

int run_reproduce(const CliArgs& args) {
  static const std::vector<std::string> recipes = {
      "three-heavy",     "star",         "tight-cycle-k3", "five-heavy",
      "five-heavy-sweep", "matching-min", "complete-min"};
  if (args.positional.size() != 1) {
    std::string names;
    for (const auto& recipe : recipes) {
      if (!names.empty()) names += ", ";
      names += recipe;
    }
    throw UsageError("reproduce needs exactly one example name: " + names);
  }
  const std::string& example = args.positional.front();

  edgesum::Report report;
  report.command = "reproduce";
  report.inputs["example"] = example;

  std::vector<std::string> lines;
  int code;
  if (example == "three-heavy") {
    code = reproduce_three_heavy(args, report, lines);
  } else if (example == "star") {
    code = reproduce_star(args, report, lines);
  } else if (example == "tight-cycle-k3") {
    code = reproduce_tight_cycle(args, report, lines);
  } else if (example == "five-heavy") {
    code = reproduce_five_heavy(args, report, lines);
  } else if (example == "five-heavy-sweep") {
    code = reproduce_five_heavy_sweep(args, report, lines);
  } else if (example == "matching-min") {
    code = reproduce_matching_min(args, report, lines);
  } else if (example == "complete-min") {
    code = reproduce_complete_min(args, report, lines);
  } else {
    std::string names;
    for (const auto& recipe : recipes) {
      if (!names.empty()) names += ", ";
      names += recipe;
    }
    throw UsageError("unknown example \"" + example + "\"; choose one of: " + names);
  }
  report.inputs["constant_overrides"] = json_constant_overrides(constants_from_args(args));
  return emit(args, report, code, lines);
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

int dispatch(const CliArgs& args) {
  if (args.command.empty()) {
    std::cerr << kSynopsis;
    return kExitUsage;
  }
  if (args.command == "help" || args.command == "--help" || args.on("help")) {
    std::cout << kSynopsis;
    return kExitSuccess;
  }
  if (args.command == "construct") return run_construct(args);
  if (args.command == "audit-covers") return run_audit_covers(args);
  if (args.command == "census") return run_census(args);
  if (args.command == "count") return run_count(args);
  if (args.command == "oracle") return run_oracle(args);
  if (args.command == "averaging") return run_averaging(args);
  if (args.command == "sumset") return run_sumset(args);
  if (args.command == "reproduce") return run_reproduce(args);
  throw UsageError("unknown command \"" + args.command + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(parse_args(argc, argv));
  } catch (const UsageError& error) {
    std::cerr << "usage error: " << error.what() << "\n\n" << kSynopsis;
    return kExitUsage;
  } catch (const edgesum::BudgetError& error) {
    std::cerr << "budget exhausted: " << error.what() << "\n";
    return kExitBudget;
  } catch (const edgesum::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 1;
  }
}
