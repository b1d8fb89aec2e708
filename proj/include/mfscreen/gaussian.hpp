#pragma once

// Standard normal CDF and quantile.
//
// The CDF goes through erfc, the quantile is Wichura's PPND16 rational
// approximation (absolute error well below 1e-9 over (0,1); the unit tests
// pin it against a bisection oracle at 1e-12).

namespace mfscreen {

/// P(N(0,1) <= x)
double normal_cdf(double x);

/// Inverse of normal_cdf on (0,1). Throws std::domain_error outside.
double normal_quantile(double p);

}  // namespace mfscreen
