#include "algebrarium/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "algebrarium/error.hpp"

#ifndef ALGEBRARIUM_VERSION
#define ALGEBRARIUM_VERSION "0.0.0"
#endif

namespace algebrarium {

std::string_view tool_version() noexcept { return ALGEBRARIUM_VERSION; }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["tool_version"] = m.tool_version.empty() ? std::string(tool_version()) : m.tool_version;
  j["config_hash"] = m.config_hash;
  j["seed"] = m.seed;
  j["parameters"] = m.parameters;
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  const auto path = dir / kManifestFile;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::optional<RunManifest> read_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / kManifestFile);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    RunManifest m;
    m.command = j.value("command", "");
    m.tool_version = j.value("tool_version", "");
    m.config_hash = j.value("config_hash", "");
    m.seed = j.value("seed", "");
    m.parameters = j.value("parameters", std::map<std::string, std::string>{});
    m.inputs = j.value("inputs", std::vector<std::string>{});
    m.outputs = j.value("outputs", std::vector<std::string>{});
    m.started_at = j.value("started_at", "");
    m.finished_at = j.value("finished_at", "");
    return m;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace algebrarium
