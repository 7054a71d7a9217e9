#include "udecide/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "udecide/error.hpp"

namespace udecide {

double BetaParams::variance() const noexcept {
  const double s = alpha + beta;
  return alpha * beta / (s * s * (s + 1.0));
}

BetaParams beta_params_from_moments(double mean, double variance) {
  if (!(mean > 0.0 && mean < 1.0)) {
    throw InvalidArgument("beta mean must lie in (0, 1), got " +
                          std::to_string(mean));
  }
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw InvalidArgument("beta variance must be > 0");
  }
  BetaParams out;
  const double bound = mean * (1.0 - mean);
  if (variance >= bound) {
    variance = kBetaClampFraction * bound;
    out.clamped = true;
  }
  const double k = (mean - mean * mean - variance) / variance;
  out.alpha = mean * k;
  out.beta = (1.0 - mean) * k;
  return out;
}

namespace {

// Fresh distribution objects per draw: libstdc++ normal_distribution caches
// its second variate, which would couple consecutive trials.
double draw_normal(double mean, double sd, RngStream& rng) {
  return std::normal_distribution<double>(mean, sd)(rng);
}

// log of a Gamma(shape, 1) draw. Shapes below one use
// Gamma(a) = Gamma(a + 1) * U^(1/a), which stays finite in log space even
// when the draw itself would underflow (clamped Betas near p0 = 0 or 1).
double draw_log_gamma(double shape, RngStream& rng) {
  if (shape >= 1.0) {
    return std::log(std::gamma_distribution<double>(shape, 1.0)(rng));
  }
  const double g = std::gamma_distribution<double>(shape + 1.0, 1.0)(rng);
  const double u = 1.0 - rng.uniform01();  // (0, 1]
  return std::log(g) + std::log(u) / shape;
}

}  // namespace

Draw sample_p_hat(double p0, double sigma_p, ProbFamily family,
                  RngStream& rng) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw InvalidArgument("p0 must lie in [0, 1]");
  if (!(sigma_p >= 0.0)) throw InvalidArgument("sigma_p must be >= 0");
  Draw out{p0, 0, false};
  if (family == ProbFamily::exact || sigma_p == 0.0) return out;

  switch (family) {
    case ProbFamily::beta: {
      if (p0 == 0.0 || p0 == 1.0) {
        throw InvalidArgument(
            "beta family needs 0 < p0 < 1 when sigma_p > 0; use 'exact'");
      }
      const BetaParams params = beta_params_from_moments(p0, sigma_p * sigma_p);
      // X / (X + Y) with X ~ Gamma(alpha), Y ~ Gamma(beta).
      const double log_x = draw_log_gamma(params.alpha, rng);
      const double log_y = draw_log_gamma(params.beta, rng);
      out.value = 1.0 / (1.0 + std::exp(log_y - log_x));
      out.clamped = params.clamped;
      break;
    }
    case ProbFamily::normal: {
      const double v = draw_normal(p0, sigma_p, rng);
      out.value = std::clamp(v, 0.0, 1.0);
      out.truncations = out.value != v ? 1 : 0;
      break;
    }
    case ProbFamily::exact:
      break;
  }
  return out;
}

Draw sample_cost_hat(double c, double sigma_c, CostFamily family,
                     RngStream& rng) {
  if (!(c >= 0.0)) throw InvalidArgument("cost must be >= 0");
  if (!(sigma_c >= 0.0)) throw InvalidArgument("sigma_c must be >= 0");
  Draw out{c, 0, false};
  if (family == CostFamily::exact || sigma_c == 0.0) return out;

  const double half_width = sigma_c * std::numbers::sqrt3;
  for (int attempt = 0; attempt <= kMaxCostRetries; ++attempt) {
    const double v = family == CostFamily::uniform_truncated
                         ? rng.uniform(c - half_width, c + half_width)
                         : draw_normal(c, sigma_c, rng);
    if (v > 0.0) {
      out.value = v;
      return out;
    }
    ++out.truncations;
  }
  throw SamplerExhausted("cost sampler: no positive draw after " +
                         std::to_string(kMaxCostRetries) + " retries (c=" +
                         std::to_string(c) + ", sigma=" +
                         std::to_string(sigma_c) + ")");
}

double sample_delta_hat_direct(double delta, double var_delta_hat,
                               RngStream& rng) {
  if (!(var_delta_hat >= 0.0)) throw InvalidArgument("variance must be >= 0");
  if (var_delta_hat == 0.0) return delta;
  return draw_normal(delta, std::sqrt(var_delta_hat), rng);
}

}  // namespace udecide
