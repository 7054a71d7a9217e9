#include "udecide/io/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace udecide::io {

using nlohmann::ordered_json;

void tally(RunManifest& manifest, const std::vector<SweepRow>& rows) {
  for (const SweepRow& row : rows) {
    if (row.summary) {
      manifest.excluded_cells += row.excluded_analytic + row.excluded_mc;
      continue;
    }
    ++manifest.cells;
    if (row.clamped) ++manifest.clamped_cells;
    if (row.error) ++manifest.failed_cells;
    manifest.truncations += row.truncations;
  }
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json(const RunManifest& m) {
  ordered_json doc;
  doc["tool"] = "udecide";
  doc["tool_version"] = m.tool_version;
  doc["subcommand"] = m.subcommand;
  doc["seed"] = m.seed;
  doc["trials"] = m.trials;
  doc["timestamp"] = m.timestamp;
  doc["config"] = ordered_json::parse(m.config_document);
  doc["counters"] = {{"cells", m.cells},
                     {"clamped_cells", m.clamped_cells},
                     {"truncations", m.truncations},
                     {"failed_cells", m.failed_cells},
                     {"excluded_cells", m.excluded_cells}};
  return doc.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(manifest);
  if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
}

std::filesystem::path manifest_path_for(const std::filesystem::path& out) {
  return out.string() + ".manifest.json";
}

std::string config_from_manifest(const std::string& manifest_json) {
  return ordered_json::parse(manifest_json).at("config").dump(2);
}

}  // namespace udecide::io
