#pragma once

// Samplers for the noisy estimates of p0, c01, c10 and delta-hat.

#include <cstdint>

#include "udecide/decision.hpp"
#include "udecide/rng.hpp"

namespace udecide {

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;
  /// The requested variance was >= mean(1 - mean) and was reduced to
  /// kBetaClampFraction * mean(1 - mean).
  bool clamped = false;

  double mean() const noexcept { return alpha / (alpha + beta); }
  double variance() const noexcept;
};

inline constexpr double kBetaClampFraction = 0.99;

/// Rejection-resampling budget for the positivity constraint on costs.
inline constexpr int kMaxCostRetries = 1000;

/// Moment-matched Beta. Requires 0 < mean < 1 and variance > 0.
BetaParams beta_params_from_moments(double mean, double variance);

/// One sampled estimate plus what the sampler had to do to produce it.
struct Draw {
  double value = 0.0;
  /// Rejected (costs) or clipped (normal p0) draws behind this value.
  std::uint32_t truncations = 0;
  /// Beta variance had to be clamped.
  bool clamped = false;
};

/// exact -> p0; beta -> moment-matched Beta; normal -> N(p0, sigma^2)
/// clipped to [0, 1]. Beta with p0 in {0, 1} and sigma > 0 is rejected.
Draw sample_p_hat(double p0, double sigma_p, ProbFamily family,
                  RngStream& rng);

/// exact -> c; uniform_truncated -> U[c - sigma*sqrt(3), c + sigma*sqrt(3)];
/// normal -> N(c, sigma^2). Non-positive draws are rejected and redrawn, at
/// most kMaxCostRetries times before SamplerExhausted is thrown.
Draw sample_cost_hat(double c, double sigma_c, CostFamily family,
                     RngStream& rng);

/// N(delta, var_delta_hat); returns delta when the variance is zero.
double sample_delta_hat_direct(double delta, double var_delta_hat,
                               RngStream& rng);

}  // namespace udecide
