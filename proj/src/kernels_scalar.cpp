#include "mfscreen/kernels.hpp"

namespace mfscreen::kernels::scalar {

double sum(const double* v, std::size_t n) {
  Accumulator acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(v[i]);
  return acc.value();
}

void centered_sums(const double* x, const double* y, std::size_t n, double mx, double my,
                   double& sxx, double& sxy) {
  Accumulator axx, axy;
  for (std::size_t i = 0; i < n; ++i) {
    const double xt = x[i] - mx;
    const double yt = y[i] - my;
    axx.add(xt * xt);
    axy.add(xt * yt);
  }
  sxx = axx.value();
  sxy = axy.value();
}

double weighted_residual_ssq(const double* x, const double* y, std::size_t n, double mx,
                             double my, double tau) {
  Accumulator acc;
  for (std::size_t i = 0; i < n; ++i) {
    const double xt = x[i] - mx;
    const double r = (y[i] - my) - tau * xt;
    const double w = xt * r;
    acc.add(w * w);  // xt^2 * r^2
  }
  return acc.value();
}

}  // namespace mfscreen::kernels::scalar
