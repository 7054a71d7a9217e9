#pragma once

// Monte Carlo estimate of the error probability and expected loss increase
// when the decision is taken on noisy estimates of p0, c01 and c10.

#include <cstdint>
#include <optional>

#include "udecide/decision.hpp"

namespace udecide {

inline constexpr std::uint64_t kDefaultTrials = 100'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct SimulationConfig {
  DecisionProblem problem;
  NoiseSpec noise;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t master_seed = kDefaultSeed;
  std::uint64_t stream_id = 0;

  void validate() const;

  bool operator==(const SimulationConfig&) const = default;
};

struct TrialOutcome {
  /// The action chosen on the estimates differs from the Bayes action.
  bool error = false;
  std::uint32_t truncations = 0;
  bool clamped = false;
};

struct SimulationResult {
  double p_err_hat = 0.0;
  double delta_inc_hat = 0.0;
  /// Empty when L* == 0.
  std::optional<double> norm_inc_hat;
  /// Binomial standard error sqrt(p(1 - p) / n).
  double stderr_p_err = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t error_count = 0;
  std::uint64_t truncation_count = 0;
  bool clamp_flag = false;
};

/// Trial `trial_index` draws from RngStream(master_seed, stream_id,
/// trial_index), so its outcome does not depend on evaluation order.
/// Never an error when delta == 0: both actions are then optimal.
TrialOutcome simulate_trial(const SimulationConfig& config,
                            std::uint64_t trial_index);

/// Runs config.trials trials on up to `threads` workers. The result is
/// bit-identical for any thread count.
SimulationResult simulate(const SimulationConfig& config, unsigned threads = 1);

}  // namespace udecide
