#pragma once

// Persistent structured run reports: one JSON document per run under
// <root>/<command>/<UTC timestamp>-<input hash>/report.json, written
// atomically, with a `latest` pointer file per command.  Exact rationals are
// rendered "p/q" by the producers; this module only handles the envelope.

#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

namespace edgesum {

inline constexpr const char* kToolVersion = "edgesum 0.1.0";

struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  std::string tool_version = kToolVersion;
};

/// $EDGESUM_REPORT_DIR when set and nonempty, else "reports" relative to the
/// current working directory.
std::filesystem::path default_report_root();

/// FNV-1a 64-bit hash of the command and serialized inputs (results and
/// timestamps excluded), rendered as 8 lowercase hex characters: re-running
/// the same inputs lands next to the previous run.
std::string report_input_hash(const Report& r);

/// Full document: command, tool_version, generated_at, inputs, results,
/// verdicts — pretty-printed JSON with a trailing newline.
std::string render_report(const Report& r, const std::string& generated_at);

/// "20260817T093000Z" / "2026-08-17T09:30:00Z" for a UTC time point.
std::string utc_compact(std::chrono::system_clock::time_point t);
std::string utc_iso(std::chrono::system_clock::time_point t);

/// Writes <root>/<command>/<timestamp>-<hash>/report.json (temp file +
/// rename) and atomically repoints <root>/<command>/latest (a one-line file
/// holding the run directory name).  Returns the run directory.  `when`
/// fixes the timestamp (tests); default is the current time.
std::filesystem::path write_report(
    const Report& r, const std::filesystem::path& root,
    std::optional<std::chrono::system_clock::time_point> when = std::nullopt);

/// Reads back <root>/<command>/latest, returning the run directory it names,
/// or nullopt when no run has been recorded.
std::optional<std::filesystem::path> latest_report_dir(const std::filesystem::path& root,
                                                       const std::string& command);

}  // namespace edgesum
