#include "edgesum/report.hpp"

#include "edgesum/errors.hpp"

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace edgesum {

namespace {

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string format_utc(std::chrono::system_clock::time_point t, const char* pattern) {
  const std::time_t seconds = std::chrono::system_clock::to_time_t(t);
  std::tm parts{};
  gmtime_r(&seconds, &parts);
  char buffer[32];
  if (std::strftime(buffer, sizeof buffer, pattern, &parts) == 0) {
    throw Error("report: timestamp formatting failed");
  }
  return buffer;
}

void atomic_write(const std::filesystem::path& target, const std::string& content) {
  const std::filesystem::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("report: cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("report: write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

void require_command(const std::string& command) {
  if (command.empty()) throw UsageError("report: command must be nonempty");
  for (char c : command) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    if (!ok) {
      throw UsageError("report: command \"" + command +
                       "\" must use only [a-z0-9_-] (it names a directory)");
    }
  }
}

}  // namespace

std::filesystem::path default_report_root() {
  if (const char* env = std::getenv("EDGESUM_REPORT_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::filesystem::path("reports");
}

std::string report_input_hash(const Report& r) {
  const std::uint64_t hash = fnv1a64(r.command + "\n" + r.inputs.dump());
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buffer, buffer + 8);
}

std::string utc_compact(std::chrono::system_clock::time_point t) {
  return format_utc(t, "%Y%m%dT%H%M%SZ");
}

std::string utc_iso(std::chrono::system_clock::time_point t) {
  return format_utc(t, "%Y-%m-%dT%H:%M:%SZ");
}

std::string render_report(const Report& r, const std::string& generated_at) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["tool_version"] = r.tool_version;
  doc["generated_at"] = generated_at;
  doc["inputs"] = r.inputs;
  doc["results"] = r.results;
  doc["verdicts"] = r.verdicts;
  return doc.dump(2) + "\n";
}

std::filesystem::path write_report(const Report& r, const std::filesystem::path& root,
                                   std::optional<std::chrono::system_clock::time_point> when) {
  require_command(r.command);
  const auto now = when.value_or(std::chrono::system_clock::now());
  const std::filesystem::path command_dir = root / r.command;
  const std::string run_name = utc_compact(now) + "-" + report_input_hash(r);
  const std::filesystem::path run_dir = command_dir / run_name;
  std::filesystem::create_directories(run_dir);

  atomic_write(run_dir / "report.json", render_report(r, utc_iso(now)));
  atomic_write(command_dir / "latest", run_name + "\n");
  return run_dir;
}

std::optional<std::filesystem::path> latest_report_dir(const std::filesystem::path& root,
                                                       const std::string& command) {
  const std::filesystem::path pointer = root / command / "latest";
  std::ifstream in(pointer);
  if (!in) return std::nullopt;
  std::string name;
  std::getline(in, name);
  if (name.empty()) return std::nullopt;
  return root / command / name;
}

}  // namespace edgesum
