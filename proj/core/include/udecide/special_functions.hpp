#pragma once

namespace udecide::special {

/// Gauss error function, rational approximation with |error| <= 1.5e-7.
/// Odd by construction. Throws InvalidArgument on non-finite input.
double erf(double x);

/// Complementary error function 1 - erf(x), evaluated without cancellation
/// for x >= 0 from the same rational form.
double erfc(double x);

/// Normal CDF: 0.5 * (1 + erf((z - mu) / (sigma * sqrt(2)))). sigma > 0.
double normal_cdf(double z, double mu = 0.0, double sigma = 1.0);

}  // namespace udecide::special
