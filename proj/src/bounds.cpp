#include "mfscreen/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mfscreen::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2Pi = std::sqrt(2.0 * std::acos(-1.0));

inline double cube(double v) { return v * v * v; }
inline double pow4(double v) { return (v * v) * (v * v); }
inline double pow6(double v) { return cube(v) * cube(v); }
inline double pow32(double v) { return v * std::sqrt(v); }  // v^(3/2), v >= 0

// Moment denominators are nonnegative; zero means a degenerate profile and
// the unchecked evaluators let the ratio blow up to +inf.
inline double ratio(double num, double den) { return den > 0.0 ? num / den : kInf; }

void require_positive(double v, const char* norm) {
  if (!(v > 0.0)) throw DegenerateProfileError(norm);
}

}  // namespace

double term_total(const TermList& terms) {
  double total = 0.0;
  for (const auto& t : terms) total += t.value;
  return total;
}

double lemma1_k1(const MomentProfile& m) {
  return ratio(m.sigma_eps * m.sigma_x, kSqrt2Pi * m.xeps2);
}

double lemma1_k2(const MomentProfile& m, const BoundConstantsConfig& c) {
  return 2.0 + c.c_be * (ratio(cube(m.xeps3), cube(m.xeps2)) +
                         ratio(2.0 * cube(m.eps3), cube(m.sigma_eps)) +
                         ratio(2.0 * cube(m.x3), cube(m.sigma_x)));
}

std::pair<double, double> lemma1_constants(const MomentProfile& m,
                                           const BoundConstantsConfig& c) {
  require_positive(m.xeps2, "xeps2");
  require_positive(m.sigma_eps, "sigma_eps");
  require_positive(m.sigma_x, "sigma_x");
  return {lemma1_k1(m), lemma1_k2(m, c)};
}

TermList g1_terms(const MomentProfile& m) {
  const double at = std::fabs(m.tau);
  const double xe2sq = m.xeps2 * m.xeps2;
  return {
      {"64*y2x1*sigma_x/xeps2^2", ratio(64.0 * m.y2x1 * m.sigma_x, xe2sq)},
      {"1120*x3^3*sigma_y^2/(xeps2^2*sigma_x)",
       ratio(1120.0 * cube(m.x3) * m.sigma_y * m.sigma_y, xe2sq * m.sigma_x)},
      {"64*sqrt(2)*xeps3^3/xeps2^3", ratio(64.0 * std::sqrt(2.0) * cube(m.xeps3), cube(m.xeps2))},
      {"288*sigma_y*x2y1/xeps2^2", ratio(288.0 * m.sigma_y * m.x2y1, xe2sq)},
      {"432*|tau|*x3^3*sigma_y/xeps2^2", ratio(432.0 * at * cube(m.x3) * m.sigma_y, xe2sq)},
      {"1152*x3y1/(sigma_x^2*xeps2)",
       ratio(1152.0 * m.x3y1, m.sigma_x * m.sigma_x * m.xeps2)},
      {"1152*x4^4*sigma_y/(sigma_x^3*xeps2)",
       ratio(1152.0 * pow4(m.x4) * m.sigma_y, cube(m.sigma_x) * m.xeps2)},
      {"576*|tau|*x4^4/(sigma_x^2*xeps2)",
       ratio(576.0 * at * pow4(m.x4), m.sigma_x * m.sigma_x * m.xeps2)},
      {"576*x2y1*sigma_y/(xeps2^2*sigma_x)",
       ratio(576.0 * m.x2y1 * m.sigma_y, xe2sq * m.sigma_x)},
      {"2*x2y2/x2y1", ratio(2.0 * m.x2y2, m.x2y1)},
      {"(2*y2x2+sigma_x*y4^2+4*sigma_y*xy2)/(2*y2x1)",
       ratio(2.0 * m.y2x2 + m.sigma_x * m.y4 * m.y4 + 4.0 * m.sigma_y * m.xy2, 2.0 * m.y2x1)},
      {"sigma_y*x4^2/x2y1", ratio(m.sigma_y * m.x4 * m.x4, m.x2y1)},
      {"13*sigma_x*x4^2/(4*x3^3)", ratio(13.0 * m.sigma_x * m.x4 * m.x4, 4.0 * cube(m.x3))},
      {"9*x6^3/(2*x3^3)", ratio(9.0 * cube(m.x6), 2.0 * cube(m.x3))},
      {"6*y4^2/sigma_y^2", ratio(6.0 * m.y4 * m.y4, m.sigma_y * m.sigma_y)},
      {"16*x4^2/sigma_x^2", ratio(16.0 * m.x4 * m.x4, m.sigma_x * m.sigma_x)},
      {"2^(7/2)*x3y32^(3/2)/x3y1^(3/2)",
       ratio(std::pow(2.0, 3.5) * pow32(m.x3y32), pow32(m.x3y1))},
      {"sigma_y*x6^3/(2*x3y1)", ratio(m.sigma_y * cube(m.x6), 2.0 * m.x3y1)},
      {"8*x6^6/x4^6", ratio(8.0 * pow6(m.x6), pow6(m.x4))},
      {"sigma_x*x6^3/(2*x4^4)", ratio(m.sigma_x * cube(m.x6), 2.0 * pow4(m.x4))},
  };
}

TermList g2_terms(const MomentProfile& m, const BoundConstantsConfig& c) {
  const double at = std::fabs(m.tau);
  const double xe2sq = m.xeps2 * m.xeps2;
  const double c1r2 = c.c_1r * c.c_1r;
  return {
      {"4", 4.0},
      {"288*x3y1*sigma_eps/(sigma_x*xeps2^2)",
       ratio(288.0 * m.x3y1 * m.sigma_eps, m.sigma_x * xe2sq)},
      {"288*sigma_y*sigma_eps*x4^4/(xeps2^2*sigma_x^2)",
       ratio(288.0 * m.sigma_y * m.sigma_eps * pow4(m.x4), xe2sq * m.sigma_x * m.sigma_x)},
      {"144*|tau|*sigma_eps*x4^4/(sigma_x*xeps2^2)",
       ratio(144.0 * at * m.sigma_eps * pow4(m.x4), m.sigma_x * xe2sq)},
      {"c_1r^2*sigma_x^3/x3^3", ratio(c1r2 * cube(m.sigma_x), cube(m.x3))},
      {"2*c_1r^2*sigma_x*sigma_y^2/y2x1",
       ratio(2.0 * c1r2 * m.sigma_x * m.sigma_y * m.sigma_y, m.y2x1)},
  };
}

TermList g3_terms(const MomentProfile& m, const BoundConstantsConfig& c) {
  const double c2r2 = c.c_2r * c.c_2r;
  return {
      {"16*c_2r^2*sigma_x*x4^2/x3^3",
       ratio(16.0 * c2r2 * m.sigma_x * m.x4 * m.x4, cube(m.x3))},
      {"32*c_2r^2*sigma_x*y4^2/y2x1",
       ratio(32.0 * c2r2 * m.sigma_x * m.y4 * m.y4, m.y2x1)},
  };
}

Lemma2Constants lemma2_constants(const MomentProfile& m, const BoundConstantsConfig& c) {
  require_positive(m.xeps2, "xeps2");
  require_positive(m.sigma_x, "sigma_x");
  require_positive(m.sigma_y, "sigma_y");
  require_positive(m.x3, "x3");
  require_positive(m.x4, "x4");
  require_positive(m.x2y1, "x2y1");
  require_positive(m.y2x1, "y2x1");
  require_positive(m.x3y1, "x3y1");
  return {term_total(g1_terms(m)), term_total(g2_terms(m, c)), term_total(g3_terms(m, c))};
}

double k_constant(const MomentProfile& m) {
  require_positive(m.xeps2, "xeps2");
  require_positive(m.sigma_x, "sigma_x");
  require_positive(m.sigma_y, "sigma_y");
  require_positive(m.x3, "x3");
  require_positive(m.x4, "x4");
  require_positive(m.xeps4, "xeps4");
  require_positive(m.x2y1, "x2y1");
  require_positive(m.y2x1, "y2x1");
  require_positive(m.x3y1, "x3y1");

  const double at = std::fabs(m.tau);
  double lo = ratio(m.xeps2, 36.0 * m.x2y1 * m.sigma_y);
  lo = std::min(lo, ratio(m.xeps2 * m.sigma_x, 72.0 * m.x2y1 * m.sigma_y));
  lo = std::min(lo, ratio(m.xeps2 * m.sigma_x, 72.0 * cube(m.x3) * m.sigma_y * m.sigma_y));
  // |tau| denominators drop out of the min when tau == 0
  if (at > 0.0) {
    lo = std::min(lo, ratio(m.xeps2, 36.0 * at * cube(m.x3) * m.sigma_y));
    lo = std::min(lo, ratio(m.sigma_x * m.sigma_x, 72.0 * at * pow4(m.x4)));
  }
  lo = std::min(lo, ratio(m.sigma_x * m.sigma_x, 288.0 * m.x3y1));
  lo = std::min(lo, ratio(cube(m.sigma_x), 288.0 * pow4(m.x4) * m.sigma_y));
  lo = std::min(lo, ratio(m.xeps2, m.xeps4 * m.xeps4));
  lo = std::min(lo, ratio(m.xeps2, 8.0 * m.y2x1 * m.sigma_x));
  return (m.xeps2 / 4.0) * lo;
}

TermList h2_terms(const MomentProfile& m, const BoundConstantsConfig& c) {
  const double at = std::fabs(m.tau);
  const double xe2sq = m.xeps2 * m.xeps2;
  return {
      {"19", 19.0},
      {"(2*y2x2+sigma_x*y4^2+4*sigma_y*xy2)/y2x1",
       ratio(2.0 * m.y2x2 + m.sigma_x * m.y4 * m.y4 + 4.0 * m.sigma_y * m.xy2, m.y2x1)},
      {"9*c_be*xeps3^3/xeps2^3", ratio(9.0 * c.c_be * cube(m.xeps3), cube(m.xeps2))},
      {"6*c_be*eps3^3/sigma_eps^3", ratio(6.0 * c.c_be * cube(m.eps3), cube(m.sigma_eps))},
      {"16*c_be*x3^3/sigma_x^3", ratio(16.0 * c.c_be * cube(m.x3), cube(m.sigma_x))},
      {"2*c_be*xeps6^6/var_x2eps2^(3/2)",
       ratio(2.0 * c.c_be * pow6(m.xeps6), pow32(m.var_x2eps2))},
      {"6*c_be*y3^3/sigma_y^3", ratio(6.0 * c.c_be * cube(m.y3), cube(m.sigma_y))},
      {"4*x2y2/x2y1", ratio(4.0 * m.x2y2, m.x2y1)},
      {"2*sigma_y*x4^2/x2y1", ratio(2.0 * m.sigma_y * m.x4 * m.x4, m.x2y1)},
      {"13*sigma_x*x4^2/(2*x3^3)", ratio(13.0 * m.sigma_x * m.x4 * m.x4, 2.0 * cube(m.x3))},
      {"9*x6^3/x3^3", ratio(9.0 * cube(m.x6), cube(m.x3))},
      {"12*y4^2/sigma_y^2", ratio(12.0 * m.y4 * m.y4, m.sigma_y * m.sigma_y)},
      {"32*x4^2/sigma_x^2", ratio(32.0 * m.x4 * m.x4, m.sigma_x * m.sigma_x)},
      {"2^(11/2)*x3y32^(3/2)/x3y1^(3/2)",
       ratio(std::pow(2.0, 5.5) * pow32(m.x3y32), pow32(m.x3y1))},
      {"3*sigma_y*x6^3/(4*x3y1)", ratio(3.0 * m.sigma_y * cube(m.x6), 4.0 * m.x3y1)},
      {"16*x6^6/x4^6", ratio(16.0 * pow6(m.x6), pow6(m.x4))},
      {"sigma_x*x6^3/x4^4", ratio(m.sigma_x * cube(m.x6), pow4(m.x4))},
      {"64*y2x1*sigma_x/xeps2^2", ratio(64.0 * m.y2x1 * m.sigma_x, xe2sq)},
      {"1120*x3^3*sigma_y^2/(xeps2^2*sigma_x)",
       ratio(1120.0 * cube(m.x3) * m.sigma_y * m.sigma_y, xe2sq * m.sigma_x)},
      {"64*sqrt(2)*xeps3^3/xeps2^3", ratio(64.0 * std::sqrt(2.0) * cube(m.xeps3), cube(m.xeps2))},
      {"288*sigma_y*x2y1/xeps2^2", ratio(288.0 * m.sigma_y * m.x2y1, xe2sq)},
      {"432*|tau|*x3^3*sigma_y/xeps2^2", ratio(432.0 * at * cube(m.x3) * m.sigma_y, xe2sq)},
      {"1152*x3y1/(sigma_x^2*xeps2)",
       ratio(1152.0 * m.x3y1, m.sigma_x * m.sigma_x * m.xeps2)},
      {"1152*x4^4*sigma_y/(sigma_x^3*xeps2)",
       ratio(1152.0 * pow4(m.x4) * m.sigma_y, cube(m.sigma_x) * m.xeps2)},
      {"576*|tau|*x4^4/(sigma_x^2*xeps2)",
       ratio(576.0 * at * pow4(m.x4), m.sigma_x * m.sigma_x * m.xeps2)},
      {"576*x2y1*sigma_y/(xeps2^2*sigma_x)",
       ratio(576.0 * m.x2y1 * m.sigma_y, xe2sq * m.sigma_x)},
  };
}

namespace {

PropOneConstants prop1_from_k(const MomentProfile& m, const BoundConstantsConfig& c, double k) {
  const double at = std::fabs(m.tau);
  PropOneConstants h;
  h.h1 = ratio(3.0 * m.sigma_eps * m.sigma_x, kSqrt2Pi * m.xeps2) + ratio(1.0, kSqrt2Pi * k);
  h.h2 = term_total(h2_terms(m, c));
  h.h3 = ratio(288.0 * k * m.sigma_eps, m.xeps2 * m.xeps2 * m.sigma_x) *
         (4.0 * m.x3y1 + ratio(4.0 * m.sigma_y * pow4(m.x4), m.sigma_x) + at * pow4(m.x4));
  const double c1r2 = c.c_1r * c.c_1r;
  h.h4 = 8.0 * (4.0 + ratio(144.0 * m.x3y1 * m.sigma_eps, m.sigma_x * m.xeps2 * m.xeps2) +
                ratio(144.0 * m.sigma_y * m.sigma_eps * pow4(m.x4),
                      m.xeps2 * m.xeps2 * m.sigma_x * m.sigma_x) +
                ratio(72.0 * at * m.sigma_eps * pow4(m.x4), m.sigma_x * m.xeps2 * m.xeps2) +
                ratio(c1r2 * cube(m.sigma_x), cube(m.x3)) +
                ratio(2.0 * c1r2 * m.sigma_x * m.sigma_y * m.sigma_y, m.y2x1));
  const double c2r2 = c.c_2r * c.c_2r;
  h.h5 = 32.0 * c2r2 *
         (ratio(m.sigma_x * m.x4 * m.x4, cube(m.x3)) +
          ratio(2.0 * m.sigma_x * m.y4 * m.y4, m.y2x1));
  return h;
}

void require_prop1(const MomentProfile& m) {
  require_positive(m.xeps2, "xeps2");
  require_positive(m.sigma_x, "sigma_x");
  require_positive(m.sigma_y, "sigma_y");
  require_positive(m.sigma_eps, "sigma_eps");
  require_positive(m.x3, "x3");
  require_positive(m.x4, "x4");
  require_positive(m.xeps4, "xeps4");
  require_positive(m.x2y1, "x2y1");
  require_positive(m.y2x1, "y2x1");
  require_positive(m.x3y1, "x3y1");
  require_positive(m.var_x2eps2, "var_x2eps2");
}

}  // namespace

PropOneConstants prop1_constants(const MomentProfile& m, const BoundConstantsConfig& c) {
  require_prop1(m);
  return prop1_from_k(m, c, k_constant(m));
}

PropOneConstants prop1_constants_with_k(const MomentProfile& m, const BoundConstantsConfig& c,
                                        double k) {
  return prop1_from_k(m, c, k);
}

double be_bound(const PropOneConstants& h, long n) {
  if (n < 2) throw std::invalid_argument("be_bound: need n >= 2");
  const double dn = static_cast<double>(n);
  const double ln = std::log(dn);
  const double rn = std::sqrt(dn);
  return (ln / rn) * h.h1 + h.h2 / rn + h.h3 / std::sqrt(dn * ln) + h.h4 / dn +
         h.h5 / (dn * rn);
}

double be_bound(const MomentProfile& m, const BoundConstantsConfig& c, long n) {
  return be_bound(prop1_constants(m, c), n);
}

SspBound ssp_lower_bound(std::span<const MomentProfile> profiles, std::span<const double> taus,
                         long n, double gamma, const BoundConstantsConfig& c) {
  if (profiles.size() != taus.size()) {
    throw std::invalid_argument("ssp_lower_bound: profiles/taus size mismatch");
  }
  if (!(gamma > 0.0)) throw std::domain_error("ssp_lower_bound: gamma must be > 0");
  if (n < 2) throw std::invalid_argument("ssp_lower_bound: need n >= 2");

  SspBound out;
  out.value = 1.0;
  if (profiles.empty()) return out;  // empty active set: the bound is 1

  const double dn = static_cast<double>(n);
  const double rn = std::sqrt(dn);
  const double card = static_cast<double>(profiles.size());

  double exp_sum = 0.0;
  double max_t1 = 0.0, max_t2 = 0.0, max_t3 = 0.0, max_t4 = 0.0;
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    const MomentProfile& m = profiles[j];
    if (!(m.sigma_x > 0.0)) throw DegenerateProfileError("sigma_x", j);
    if (!(m.xeps2 > 0.0)) throw DegenerateProfileError("xeps2", j);
    if (taus[j] == 0.0) {
      throw std::invalid_argument("ssp_lower_bound: tau must be nonzero for active feature " +
                                  std::to_string(j));
    }

    const double arg = rn * m.sigma_x * m.sigma_x * std::fabs(taus[j]) /
                           (2.0 * std::sqrt(2.0) * m.xeps2) -
                       gamma;
    exp_sum += std::exp(-0.25 * arg * arg);

    // Per the open-question resolution, a vanishing denominator inside a
    // constant turns that max-term infinite and the bound vacuous.
    const double g1 = term_total(g1_terms(m));
    const double g2 = term_total(g2_terms(m, c));
    const double g3 = term_total(g3_terms(m, c));
    max_t1 = std::max(max_t1, 2.0 * lemma1_k1(m));
    max_t2 = std::max(max_t2, 2.0 * lemma1_k2(m, c) +
                                  ratio(2.0 * m.x4 * m.x4, m.sigma_x * m.sigma_x) + g1);
    max_t3 = std::max(max_t3, 4.0 * g2 + 2.0);
    max_t4 = std::max(max_t4, g3);
  }

  out.value = 1.0 - exp_sum - (std::log(dn) / rn) * card * max_t1 - (card / rn) * max_t2 -
              (card / dn) * max_t3 - (card / (dn * rn)) * max_t4;
  out.vacuous = !(out.value >= 0.0);  // negative or NaN/-inf
  return out;
}

double fpr_deviation_bound_from_h(std::span<const PropOneConstants> hs, long n) {
  if (n < 2) throw std::invalid_argument("fpr_deviation_bound: need n >= 2");
  if (hs.empty()) return 0.0;
  double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0, m5 = 0.0;
  for (const auto& h : hs) {
    m1 = std::max(m1, 2.0 * h.h1);
    m2 = std::max(m2, 2.0 * h.h2);
    m3 = std::max(m3, 2.0 * h.h3);
    m4 = std::max(m4, 2.0 * h.h4);
    m5 = std::max(m5, 2.0 * h.h5);
  }
  const double dn = static_cast<double>(n);
  const double ln = std::log(dn);
  const double rn = std::sqrt(dn);
  return (ln / rn) * m1 + m2 / rn + m3 / std::sqrt(dn * ln) + m4 / dn + m5 / (dn * rn);
}

double fpr_deviation_bound(std::span<const MomentProfile> profiles, long n,
                           const BoundConstantsConfig& c) {
  std::vector<PropOneConstants> hs;
  hs.reserve(profiles.size());
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    try {
      hs.push_back(prop1_constants(profiles[j], c));
    } catch (const DegenerateProfileError& e) {
      throw DegenerateProfileError(e.norm(), j);
    }
  }
  return fpr_deviation_bound_from_h(hs, n);
}

GuaranteeReport guarantee_report(const MomentProfile& m, const BoundConstantsConfig& c, long n) {
  GuaranteeReport r;
  auto [k1, k2] = lemma1_constants(m, c);
  r.k1 = k1;
  r.k2 = k2;
  const auto g = lemma2_constants(m, c);
  r.g1 = g.g1;
  r.g2 = g.g2;
  r.g3 = g.g3;
  r.k_const = k_constant(m);
  const auto h = prop1_constants(m, c);
  r.h1 = h.h1;
  r.h2 = h.h2;
  r.h3 = h.h3;
  r.h4 = h.h4;
  r.h5 = h.h5;
  r.be_bound = be_bound(h, n);
  r.n = n;
  return r;
}

}  // namespace mfscreen::bounds
