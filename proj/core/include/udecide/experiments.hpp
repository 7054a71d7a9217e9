#pragma once

// Declarative sweeps over (scenario, sigma, p0, cost pair) and their runner.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udecide/decision.hpp"
#include "udecide/montecarlo.hpp"

namespace udecide {

/// Which estimators carry noise: cost-only sets sigma_c01 = sigma_c10 = s,
/// prob-only sets sigma_p0 = s, both sets all three.
enum class ScenarioTag : std::uint8_t { cost_only, prob_only, both };

inline constexpr ScenarioTag kAllScenarios[] = {
    ScenarioTag::cost_only, ScenarioTag::prob_only, ScenarioTag::both};

std::string_view to_string(ScenarioTag tag) noexcept;
std::optional<ScenarioTag> parse_scenario(std::string_view text) noexcept;

struct Scenario {
  ScenarioTag tag = ScenarioTag::both;
  double sigma = 0.0;

  /// Noise for this scenario; noisy estimators use the given families, the
  /// rest are `exact`.
  NoiseSpec noise(ProbFamily family_p, CostFamily family_c,
                  bool delta_mode = false) const;
};

enum class SweepKind : std::uint8_t { figure1, figure2, custom };
std::string_view to_string(SweepKind kind) noexcept;
std::optional<SweepKind> parse_sweep_kind(std::string_view text) noexcept;

/// How the random cost draws of figure2 are combined: `paired` draws n
/// (c01, c10) pairs; `cross` draws n values of each and takes all n*n pairs.
enum class CostCombination : std::uint8_t { paired, cross };
std::string_view to_string(CostCombination mode) noexcept;
std::optional<CostCombination> parse_cost_combination(std::string_view text) noexcept;

struct CostPair {
  double c01 = 0.0;
  double c10 = 0.0;
  bool operator==(const CostPair&) const = default;
};

struct SweepConfig {
  SweepKind kind = SweepKind::custom;
  std::vector<double> sigma_grid;
  std::vector<double> p0_grid;
  std::vector<CostPair> cost_pairs;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t master_seed = kDefaultSeed;
  bool run_mc = false;
  ProbFamily family_p = ProbFamily::beta;
  CostFamily family_c = CostFamily::uniform_truncated;
  bool delta_mode = false;
  CostCombination cost_combination = CostCombination::paired;

  /// Non-empty grids, ascending nonnegative sigmas, valid p0 and costs,
  /// non-exact families (sigma > 0 cells need a noisy family).
  void validate() const;

  std::size_t cell_count() const noexcept {
    return std::size(kAllScenarios) * sigma_grid.size() * p0_grid.size() *
           cost_pairs.size();
  }

  bool operator==(const SweepConfig&) const = default;
};

/// Standard-error grid shared by both figures: 0, 0.05, ..., 0.5.
std::vector<double> default_sigma_grid();

/// p0 in {0.05, 0.1, 0.2, 0.3, 0.4, 0.5}, (c01, c10) = (0.3, 0.5),
/// analytic only.
SweepConfig figure1_config();

/// Stream id reserved for drawing figure2 cost pairs; cell streams count
/// up from zero.
inline constexpr std::uint64_t kCostPairStream = 0xC057'0000'0000'0000ULL;

/// Draws the figure2 cost table: c01 ~ U[0.2, 0.4], c10 ~ U[0.4, 0.6].
std::vector<CostPair> draw_cost_pairs(std::uint64_t master_seed,
                                      std::size_t count,
                                      CostCombination mode);

/// 25 p0 values i/26, 25 seeded cost pairs, Beta / truncated-uniform
/// estimators, Monte Carlo on with 10^4 trials per cell.
SweepConfig figure2_config(std::uint64_t master_seed = kDefaultSeed,
                           CostCombination mode = CostCombination::paired);

inline constexpr std::uint64_t kFigure2Trials = 10'000;

struct SweepRow {
  ScenarioTag scenario = ScenarioTag::both;
  bool summary = false;

  // Cell coordinates; empty on summary rows.
  std::optional<double> p0;
  std::optional<double> c01;
  std::optional<double> c10;

  double sigma_p = 0.0;
  double sigma_c01 = 0.0;
  double sigma_c10 = 0.0;

  // Per-cell analytic quantities; empty on summary rows.
  std::optional<double> delta;
  std::optional<double> l_star;
  std::optional<double> var_delta_hat;

  // Summary rows hold arithmetic means over the defined cells.
  double p_err_analytic = 0.0;
  double delta_inc_analytic = 0.0;
  std::optional<double> norm_inc_analytic;

  std::optional<double> p_err_mc;
  std::optional<double> delta_inc_mc;
  std::optional<double> norm_inc_mc;

  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  bool clamped = false;
  std::uint64_t truncations = 0;

  /// Set when the Monte Carlo part of this cell failed.
  std::optional<std::string> error;

  // Summary rows only.
  std::size_t cells = 0;
  std::size_t excluded_analytic = 0;
  std::size_t excluded_mc = 0;
};

/// Evaluates one cell. Monte Carlo failures are recorded in `error`.
SweepRow run_cell(const SweepConfig& config, const Scenario& scenario,
                  double p0, const CostPair& costs, std::uint64_t stream_id);

/// Per-cell rows in enumeration order (scenario, sigma, p0, cost pair),
/// followed by one summary row per (scenario, sigma) in the same order.
/// Output is independent of `threads`.
std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads = 1);

/// One row for a single problem: scenario tag from which estimators are
/// noisy (all exact reads as `both` at sigma 0), Monte Carlo when `run_mc`.
/// Sampler failures propagate.
SweepRow evaluate_problem(const SimulationConfig& config, bool run_mc,
                          unsigned threads = 1);

/// Averages cell rows sharing one (scenario, sigma).
SweepRow summarize(ScenarioTag tag, double sigma,
                   const std::vector<const SweepRow*>& cells);

}  // namespace udecide
