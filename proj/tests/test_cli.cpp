// End-to-end tests of the command-line tool: spec'd example runs, the
// exit-code contract (0 success, 2 usage, 3 discrepancy, 4 budget), report
// layout on disk, and input-reproducibility of the report payload.
//
// Each case launches the real binary (path injected by the build as
// EDGESUM_CLI_PATH) with EDGESUM_REPORT_DIR pointed at a scratch directory.

#include <doctest.h>

#ifdef EDGESUM_CLI_PATH

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct CliRun {
  int exit_code = -1;
  std::string output;  // stdout + stderr, interleaved
};

// Scratch directory per test case, cleaned up on destruction.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& tag) {
    dir = fs::temp_directory_path() / ("edgesum_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ignored;
    fs::remove_all(dir, ignored);
  }
};

CliRun run_cli(const Scratch& scratch, const std::string& arguments) {
  const fs::path out_file = scratch.dir / "cli_output.txt";
  std::string command = "EDGESUM_REPORT_DIR='" + (scratch.dir / "reports").string() + "' '" +
                        EDGESUM_CLI_PATH + "' " + arguments + " > '" + out_file.string() +
                        "' 2>&1";
  const int status = std::system(command.c_str());
  CliRun run;
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  run.output = buffer.str();
  return run;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Loads <reports>/<command>/<run named by latest>/report.json.
Json latest_report(const Scratch& scratch, const std::string& command) {
  const fs::path base = scratch.dir / "reports" / command;
  std::ifstream pointer(base / "latest");
  REQUIRE(pointer.good());
  std::string run_name;
  std::getline(pointer, run_name);
  std::ifstream report(base / run_name / "report.json");
  REQUIRE(report.good());
  return Json::parse(report);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reproduce three-heavy emits the documented counts and verdict") {
  Scratch scratch("three_heavy");
  const CliRun run = run_cli(scratch, "reproduce three-heavy --k 3");
  CHECK(run.exit_code == 0);
  CHECK(contains(run.output, "count 35"));
  CHECK(contains(run.output, "star count 36"));
  CHECK(contains(run.output, "below C(n-1,k-1)"));

  const Json report = latest_report(scratch, "reproduce");
  CHECK(report.at("command") == "reproduce");
  CHECK(report.at("results").at("nonnegative_count") == "35");
  CHECK(report.at("results").at("star_count") == "36");
  CHECK(report.at("verdicts").at("count_matches_closed_form") == true);
  CHECK(report.at("verdicts").at("verdict") == "below C(n-1,k-1)");
}

TEST_CASE("averaging on the two-edge matching reproduces expectation 1") {
  Scratch scratch("averaging_matching");
  const CliRun run = run_cli(scratch, "averaging --exact --n 4 --k 2 --matching");
  CHECK(run.exit_code == 0);
  CHECK(contains(run.output, "exact expectation = 1/1"));

  const Json report = latest_report(scratch, "averaging");
  CHECK(report.at("results").at("expectation") == "1/1");
  CHECK(report.at("results").at("formula") == "1/1");
  CHECK(report.at("verdicts").at("identity_matches_formula") == true);
}

TEST_CASE("census on n = 36, k = 3 stays below the multiplicity bound") {
  Scratch scratch("census_36_3");
  const CliRun run = run_cli(scratch, "census --n 36 --k 3 --threads 2");
  CHECK(run.exit_code == 0);

  const Json report = latest_report(scratch, "census");
  CHECK(report.at("results").at("families") == 144);
  CHECK(report.at("results").at("max_multiplicity").get<long long>() <= 110);
  CHECK(report.at("results").at("non_disjoint_slots").empty());
  CHECK(report.at("verdicts").at("max_multiplicity_le_c1") == true);
  CHECK(report.at("verdicts").at("slots_pairwise_disjoint") == true);
  CHECK(report.at("verdicts").at("edges_in_host") == true);
}

// From k = 5 the slots placing the pair (h, k-h) assign one edge to several
// families; the audit reports which slots and exits 3 while the multiplicity
// bound itself still holds.
TEST_CASE("census reports the non-disjoint slots on a k = 5 host") {
  Scratch scratch("census_60_5");
  const CliRun run = run_cli(scratch, "census --n 60 --k 5 --threads 2");
  CHECK(run.exit_code == 3);

  const Json report = latest_report(scratch, "census");
  CHECK(report.at("results").at("non_disjoint_slots") == Json::array({30, 34}));
  CHECK(report.at("verdicts").at("max_multiplicity_le_c1") == true);
  CHECK(report.at("verdicts").at("slots_pairwise_disjoint") == false);
  CHECK(report.at("verdicts").at("edges_in_host") == true);
}

TEST_CASE("usage problems exit with code 2 and print the synopsis") {
  Scratch scratch("usage");
  CHECK(run_cli(scratch, "no-such-command").exit_code == 2);
  CHECK(run_cli(scratch, "census --n 36").exit_code == 2);

  const CliRun bad_flag = run_cli(scratch, "count --n 12 --k 3 --bad-flag 1");
  CHECK(bad_flag.exit_code == 2);
  CHECK(contains(bad_flag.output, "unknown flag --bad-flag"));
  CHECK(contains(bad_flag.output, "usage: edgesum"));

  // Constant overrides must be positive and well-formed.
  CHECK(run_cli(scratch, "census --n 36 --k 3 --eps0 0").exit_code == 2);
  CHECK(run_cli(scratch, "census --n 36 --k 3 --eps0 nonsense").exit_code == 2);
}

TEST_CASE("an exhausted search budget exits with code 4 and proven bounds") {
  Scratch scratch("budget");
  const CliRun run = run_cli(scratch, "oracle --n 36 --k 3 --budget 10");
  CHECK(run.exit_code == 4);
  CHECK(contains(run.output, "budget exhausted"));

  const Json report = latest_report(scratch, "oracle");
  CHECK(report.at("verdicts").at("status") == "unknown");
  CHECK(report.at("results").at("min").at("budget_exhausted") == true);
  CHECK(report.at("results").at("min").at("lower") == "1");
}

TEST_CASE("a failing audit exits with code 3") {
  // An eps4 override above 1/2 makes the growth target exceed the modulus,
  // so every pair fails; the override is recorded in the report inputs.
  Scratch scratch("discrepancy");
  const CliRun run = run_cli(scratch, "sumset growth --k 4 --eps4 3/5");
  CHECK(run.exit_code == 3);
  CHECK(contains(run.output, "FAILURES FOUND"));

  const Json report = latest_report(scratch, "sumset");
  CHECK(report.at("results").at("growth").at("failures").get<long long>() > 0);
  CHECK(report.at("verdicts").at("zero_failures") == false);
  const Json& overrides = report.at("inputs").at("constant_overrides");
  REQUIRE(overrides.size() == 1);
  CHECK(overrides.at(0).at("name") == "eps4");
  CHECK(overrides.at(0).at("value") == "3/5");
}

TEST_CASE("assignment files round-trip through the count command") {
  Scratch scratch("assignment_file");
  const fs::path file = scratch.dir / "values.txt";
  std::ofstream(file) << "5\n-1\n-1\n-1\n-1\n-1\n";

  const CliRun run =
      run_cli(scratch, "count --assignment '" + file.string() + "' --matching --n 6 --k 3");
  CHECK(run.exit_code == 0);

  const Json report = latest_report(scratch, "count");
  const Json expected = {"5/1", "-1/1", "-1/1", "-1/1", "-1/1", "-1/1"};
  CHECK(report.at("results").at("assignment_values") == expected);
  CHECK(report.at("results").at("nonnegative_count") == "1");
  CHECK(report.at("results").at("min_degree") == 1);
  CHECK(report.at("verdicts").at("meets_min_degree") == true);

  // Wrong number of lines is a usage error.
  const CliRun mismatch =
      run_cli(scratch, "count --assignment '" + file.string() + "' --n 24 --k 2");
  CHECK(mismatch.exit_code == 2);
}

TEST_CASE("collect-edges embeds the exact edge list") {
  Scratch scratch("collect_edges");
  const CliRun run = run_cli(scratch, "construct --matching --t 2 --k 3 --collect-edges");
  CHECK(run.exit_code == 0);

  const Json report = latest_report(scratch, "construct");
  const Json expected = {{0, 1, 2}, {3, 4, 5}};
  CHECK(report.at("results").at("hypergraph").at("edges") == expected);
  CHECK(report.at("verdicts").at("edge_count_matches") == true);
  CHECK(report.at("verdicts").at("regular_with_expected_degree") == true);
}

TEST_CASE("rerunning identical inputs reproduces the payload bit-exactly") {
  Scratch scratch("reproducible");
  CHECK(run_cli(scratch, "reproduce five-heavy --k 12").exit_code == 0);
  Json first = latest_report(scratch, "reproduce");
  CHECK(run_cli(scratch, "reproduce five-heavy --k 12").exit_code == 0);
  Json second = latest_report(scratch, "reproduce");

  CHECK(first.at("inputs") == second.at("inputs"));
  first.erase("generated_at");
  second.erase("generated_at");
  CHECK(first == second);

  // Same inputs hash to the same run-directory suffix.
  const fs::path base = scratch.dir / "reports" / "reproduce";
  std::ifstream pointer(base / "latest");
  std::string run_name;
  std::getline(pointer, run_name);
  CHECK(run_name.size() > 8);
  const std::string hash = run_name.substr(run_name.size() - 8);
  for (const auto& entry : fs::directory_iterator(base)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    CHECK(name.substr(name.size() - 8) == hash);
  }
}

TEST_CASE("--out overrides the report root") {
  Scratch scratch("out_flag");
  const fs::path custom = scratch.dir / "custom_root";
  const CliRun run =
      run_cli(scratch, "construct --n 12 --k 3 --out '" + custom.string() + "'");
  CHECK(run.exit_code == 0);
  CHECK(fs::exists(custom / "construct" / "latest"));
  CHECK(!fs::exists(scratch.dir / "reports" / "construct"));
}

}  // TEST_SUITE

#else  // EDGESUM_CLI_PATH

TEST_SUITE("cli") {
TEST_CASE("cli binary not built; end-to-end suite skipped") {
  MESSAGE("configure with EDGESUM_BUILD_TOOLS=ON to enable the cli suite");
}
}

#endif  // EDGESUM_CLI_PATH
