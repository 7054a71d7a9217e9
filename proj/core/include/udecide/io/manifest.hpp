#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "udecide/experiments.hpp"

namespace udecide::io {

struct RunManifest {
  std::string tool_version;
  std::string subcommand;
  /// Output of to_document() for the resolved config.
  std::string config_document;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::string timestamp;
  std::uint64_t cells = 0;
  std::uint64_t clamped_cells = 0;
  std::uint64_t truncations = 0;
  std::uint64_t failed_cells = 0;
  /// Cells left out of summary means because L* = 0 or the cell failed.
  std::uint64_t excluded_cells = 0;
};

/// Fills the clamp/truncation/failure counters from sweep rows.
void tally(RunManifest& manifest, const std::vector<SweepRow>& rows);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

std::string to_json(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path);

/// "<out>.manifest.json"
std::filesystem::path manifest_path_for(const std::filesystem::path& out);

/// The embedded config of a manifest, ready for parse_config().
std::string config_from_manifest(const std::string& manifest_json);

}  // namespace udecide::io
