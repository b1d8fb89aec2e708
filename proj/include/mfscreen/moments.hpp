#pragma once

#include <cstddef>
#include <span>

#include "mfscreen/types.hpp"

namespace mfscreen {

/// Plug-in moment estimates for one (X, Y) pair, on the centered variables
/// Xt = X - mean(X), Yt = Y - mean(Y) and the marginal error
/// e = Yt - tau*Xt with tau = Cov_n(X,Y)/Var_n(X).
///
/// Every L_q norm is the empirical one, ((1/n) sum |.|^q)^(1/q); the sigmas
/// divide by n (no small-sample correction). Fields are norms, not powers:
/// formulas re-raise them as needed.
struct MomentProfile {
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double sigma_eps = 0.0;
  double tau = 0.0;

  double x3 = 0.0, x4 = 0.0, x6 = 0.0;  // ||Xt||_3, ||Xt||_4, ||Xt||_6
  double y3 = 0.0, y4 = 0.0;            // ||Yt||_3, ||Yt||_4
  double eps3 = 0.0;                    // ||e||_3

  double xeps2 = 0.0, xeps3 = 0.0, xeps4 = 0.0, xeps6 = 0.0;  // ||Xt*e||_q
  double xy2 = 0.0;                                           // ||Xt*Yt||_2
  double x2y1 = 0.0, x2y2 = 0.0;                              // ||Xt^2*Yt||_1, _2
  double y2x1 = 0.0, y2x2 = 0.0;                              // ||Yt^2*Xt||_1, _2
  double x3y1 = 0.0, x3y32 = 0.0;                             // ||Xt^3*Yt||_1, _{3/2}
  double var_x2eps2 = 0.0;                                    // Var(Xt^2*e^2)

  long n_used = 0;
};

/// Plug-in estimation from n >= 3 paired observations. Throws
/// DegenerateProfileError("var_x") when the x column is constant, and
/// std::invalid_argument on length mismatch / n < 3.
MomentProfile estimate_moments(std::span<const double> x, std::span<const double> y);

}  // namespace mfscreen
