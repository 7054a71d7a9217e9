#include "udecide/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "udecide/error.hpp"

namespace udecide::special {
namespace {

// Abramowitz & Stegun 7.1.26.
constexpr double kP = 0.3275911;
constexpr double kA1 = 0.254829592;
constexpr double kA2 = -0.284496736;
constexpr double kA3 = 1.421413741;
constexpr double kA4 = -1.453152027;
constexpr double kA5 = 1.061405429;

// erfc on x > 0.
double erfc_positive(double x) noexcept {
  const double t = 1.0 / (1.0 + kP * x);
  const double poly = t * (kA1 + t * (kA2 + t * (kA3 + t * (kA4 + t * kA5))));
  return poly * std::exp(-x * x);
}

void require_finite(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("erf: argument must be finite");
}

}  // namespace

double erf(double x) {
  require_finite(x);
  if (x == 0.0) return x;
  const double magnitude = 1.0 - erfc_positive(std::fabs(x));
  return std::signbit(x) ? -magnitude : magnitude;
}

double erfc(double x) {
  require_finite(x);
  if (x == 0.0) return 1.0;
  if (x > 0.0) return erfc_positive(x);
  return 2.0 - erfc_positive(-x);
}

double normal_cdf(double z, double mu, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("normal_cdf: sigma must be > 0");
  return 0.5 * (1.0 + erf((z - mu) / (sigma * std::numbers::sqrt2)));
}

}  // namespace udecide::special
