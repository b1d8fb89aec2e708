#include "mfscreen/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mfscreen/kernels.hpp"

namespace mfscreen {

namespace {

inline double root4(double v) { return std::sqrt(std::sqrt(v)); }
inline double root6(double v) { return std::cbrt(std::sqrt(v)); }

}  // namespace

MomentProfile estimate_moments(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw std::invalid_argument("estimate_moments: length mismatch");
  if (n < 3) throw std::invalid_argument("estimate_moments: need n >= 3");

  const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
  if (*mn == *mx) throw DegenerateProfileError("var_x");

  const double inv_n = 1.0 / static_cast<double>(n);
  const double mean_x = kernels::sum(x.data(), n) * inv_n;
  const double mean_y = kernels::sum(y.data(), n) * inv_n;

  double sxx = 0.0, sxy = 0.0;
  kernels::centered_sums(x.data(), y.data(), n, mean_x, mean_y, sxx, sxy);
  if (sxx == 0.0) throw DegenerateProfileError("var_x");
  const double tau = sxy / sxx;

  using kernels::Accumulator;
  Accumulator syy, see, ax3, ax4, ax6, ay3, ay4, ae3;
  Accumulator axe2, axe3, axe4, axe6, axy2, ax2y1, ax2y2, ay2x1, ay2x2, ax3y1, ax3y32, aw;

  for (std::size_t i = 0; i < n; ++i) {
    const double xt = x[i] - mean_x;
    const double yt = y[i] - mean_y;
    const double e = yt - tau * xt;

    const double xt2 = xt * xt;
    const double yt2 = yt * yt;
    const double e2 = e * e;
    const double axt = std::fabs(xt), ayt = std::fabs(yt), ae = std::fabs(e);

    syy.add(yt2);
    see.add(e2);
    ax3.add(xt2 * axt);
    ax4.add(xt2 * xt2);
    ax6.add(xt2 * xt2 * xt2);
    ay3.add(yt2 * ayt);
    ay4.add(yt2 * yt2);
    ae3.add(e2 * ae);

    const double xe = xt * e;
    const double xe2 = xe * xe;
    axe2.add(xe2);
    axe3.add(xe2 * std::fabs(xe));
    axe4.add(xe2 * xe2);
    axe6.add(xe2 * xe2 * xe2);

    const double xy = xt * yt;
    axy2.add(xy * xy);

    const double x2y = xt2 * ayt;  // |Xt^2*Yt|
    ax2y1.add(x2y);
    ax2y2.add(x2y * x2y);

    const double y2x = yt2 * axt;  // |Yt^2*Xt|
    ay2x1.add(y2x);
    ay2x2.add(y2x * y2x);

    const double x3y = xt2 * axt * ayt;  // |Xt^3*Yt|
    ax3y1.add(x3y);
    ax3y32.add(x3y * std::sqrt(x3y));  // |.|^(3/2)

    aw.add(xt2 * e2);
  }

  MomentProfile m;
  m.n_used = static_cast<long>(n);
  m.tau = tau;
  m.sigma_x = std::sqrt(sxx * inv_n);
  m.sigma_y = std::sqrt(syy.value() * inv_n);
  m.sigma_eps = std::sqrt(see.value() * inv_n);

  m.x3 = std::cbrt(ax3.value() * inv_n);
  m.x4 = root4(ax4.value() * inv_n);
  m.x6 = root6(ax6.value() * inv_n);
  m.y3 = std::cbrt(ay3.value() * inv_n);
  m.y4 = root4(ay4.value() * inv_n);
  m.eps3 = std::cbrt(ae3.value() * inv_n);

  m.xeps2 = std::sqrt(axe2.value() * inv_n);
  m.xeps3 = std::cbrt(axe3.value() * inv_n);
  m.xeps4 = root4(axe4.value() * inv_n);
  m.xeps6 = root6(axe6.value() * inv_n);
  m.xy2 = std::sqrt(axy2.value() * inv_n);
  m.x2y1 = ax2y1.value() * inv_n;
  m.x2y2 = std::sqrt(ax2y2.value() * inv_n);
  m.y2x1 = ay2x1.value() * inv_n;
  m.y2x2 = std::sqrt(ay2x2.value() * inv_n);
  m.x3y1 = ax3y1.value() * inv_n;
  {
    const double mean_32 = ax3y32.value() * inv_n;  // (1/n) sum |.|^(3/2)
    m.x3y32 = std::cbrt(mean_32 * mean_32);         // ^(2/3)
  }

  // Var(Xt^2 e^2) as a centered second moment (second pass).
  const double w_mean = aw.value() * inv_n;
  Accumulator aww;
  for (std::size_t i = 0; i < n; ++i) {
    const double xt = x[i] - mean_x;
    const double e = (y[i] - mean_y) - tau * xt;
    const double d = xt * xt * e * e - w_mean;
    aww.add(d * d);
  }
  m.var_x2eps2 = aww.value() * inv_n;

  return m;
}

}  // namespace mfscreen
