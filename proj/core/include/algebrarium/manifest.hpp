#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algebrarium {

/// manifest.json written once into every output directory.
struct RunManifest {
  std::string command;
  std::string config_hash;
  std::string seed;
  std::string tool_version;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string started_at;
  std::string finished_at;
};

inline constexpr std::string_view kManifestFile = "manifest.json";

std::string_view tool_version() noexcept;
std::string utc_timestamp();
std::string hex64(std::uint64_t v);

/// Throws IoError.
void write_manifest(const std::filesystem::path& dir, const RunManifest& m);
/// nullopt when the directory has no readable manifest.
std::optional<RunManifest> read_manifest(const std::filesystem::path& dir);

}  // namespace algebrarium
