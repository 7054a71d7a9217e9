#pragma once

// Config documents are YAML (JSON is accepted as a subset). Keys:
//
//   problem: {p0, c01, c10, c00 = 0, c11 = 0}
//   noise:   {sigma_p0, sigma_c01, sigma_c10, family_p, family_c, delta_mode}
//   run:     {trials = 100000, seed = 42, stream_id = 0}
//   sweep:   {kind, sigma_grid, p0_grid, cost_pairs, cost_combination,
//             run_mc, family_p, family_c, delta_mode}
//
// A document with a `sweep` section is a sweep; otherwise it needs a
// `problem` section and describes a single simulation.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "udecide/experiments.hpp"
#include "udecide/montecarlo.hpp"

namespace udecide::io {

class ConfigError : public std::runtime_error {
 public:
  /// `line` is 1-based; 0 when unknown.
  ConfigError(std::string key, int line, const std::string& what);

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  std::string key_;
  int line_;
};

/// Values that win over the document (command-line flags).
struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
};

using Config = std::variant<SimulationConfig, SweepConfig>;

Config parse_config(std::string_view text, const ConfigOverrides& overrides = {});

SimulationConfig parse_simulation_config(std::string_view text,
                                         const ConfigOverrides& overrides = {});

/// `default_kind` applies when the document names no sweep.kind (or has no
/// sweep section at all). A figure2 document without explicit cost_pairs
/// draws them from the resolved seed.
SweepConfig parse_sweep_config(std::string_view text,
                               const ConfigOverrides& overrides = {},
                               SweepKind default_kind = SweepKind::custom);

/// Fully resolved config as a JSON document that parses back to an equal
/// value.
std::string to_document(const SimulationConfig& config);
std::string to_document(const SweepConfig& config);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace udecide::io
