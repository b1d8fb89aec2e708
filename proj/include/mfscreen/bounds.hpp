#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfscreen/moments.hpp"

// Explicit constants of the finite-sample guarantees (K1, K2, G1-G3, K,
// H1-H5) and the three bound expressions built from them, all evaluated at
// plug-in moments.
//
// Two evaluation modes exist for each constant:
//   - the checked entry points below validate every denominator and throw
//     DegenerateProfileError naming the vanishing norm;
//   - the *_terms / aggregate evaluators follow IEEE semantics, mapping a
//     vanishing denominator to +inf so a composite bound degrades to a
//     flagged vacuous value instead of aborting a whole report.
//
// Ratios whose denominator carries |tau| are dropped from the min in K
// (treated as +inf) when tau == 0: the quantity they guard vanishes with tau.

namespace mfscreen::bounds {

struct BoundConstantsConfig {
  double c_be = 0.56;  // Berry-Esseen constant
  double c_1r = 1.0;   // Rosenthal sqrt(q) constant
  double c_2r = 1.0;   // Rosenthal q constant
};

struct Term {
  std::string label;
  double value = 0.0;
};
using TermList = std::vector<Term>;
double term_total(const TermList& terms);

// ---- Lemma-level constants -------------------------------------------------

double lemma1_k1(const MomentProfile& m);
double lemma1_k2(const MomentProfile& m, const BoundConstantsConfig& c);
/// (k1, k2); throws on vanishing sigma_x, sigma_eps or ||Xt*e||_2.
std::pair<double, double> lemma1_constants(const MomentProfile& m, const BoundConstantsConfig& c);

TermList g1_terms(const MomentProfile& m);
TermList g2_terms(const MomentProfile& m, const BoundConstantsConfig& c);
TermList g3_terms(const MomentProfile& m, const BoundConstantsConfig& c);
/// (g1, g2, g3); throws on any vanishing denominator.
struct Lemma2Constants {
  double g1 = 0.0, g2 = 0.0, g3 = 0.0;
};
Lemma2Constants lemma2_constants(const MomentProfile& m, const BoundConstantsConfig& c);

/// K of the minimum-of-ratios form; > 0 whenever the profile is usable.
double k_constant(const MomentProfile& m);

// ---- Proposition 1: Berry-Esseen bound for the studentized score ----------

struct PropOneConstants {
  double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0, h5 = 0.0;
};

/// H1..H5 with K = k_constant(m); throws on vanishing denominators
/// (including Var(Xt^2 e^2)).
PropOneConstants prop1_constants(const MomentProfile& m, const BoundConstantsConfig& c);
/// Same with an injected K (spot checks and what-if evaluations).
PropOneConstants prop1_constants_with_k(const MomentProfile& m, const BoundConstantsConfig& c,
                                        double k);
TermList h2_terms(const MomentProfile& m, const BoundConstantsConfig& c);

/// (log n/sqrt n)H1 + H2/sqrt n + H3/sqrt(n log n) + H4/n + H5/n^(3/2)
double be_bound(const PropOneConstants& h, long n);
double be_bound(const MomentProfile& m, const BoundConstantsConfig& c, long n);

// ---- Proposition 2: sure-screening lower bound -----------------------------

struct SspBound {
  double value = 0.0;
  bool vacuous = false;  // value < 0, or a constant degenerated to +inf
};

/// Lower bound on P(M* subset of M-hat) for user-declared active features.
/// profiles[i] and taus[i] describe the i-th active feature; taus[i] must be
/// nonzero and each profile non-degenerate (sigma_x, ||Xt*e||_2 > 0), else
/// DegenerateProfileError naming the feature. The value may be negative
/// (vacuous = true) and is returned as-is.
SspBound ssp_lower_bound(std::span<const MomentProfile> profiles, std::span<const double> taus,
                         long n, double gamma, const BoundConstantsConfig& c);

// ---- Proposition 3: FPR deviation bound -------------------------------------

/// Bound on |E[FPR] - q| over the declared null features.
double fpr_deviation_bound(std::span<const MomentProfile> profiles, long n,
                           const BoundConstantsConfig& c);
/// Same from precomputed H constants (tests and composed reports).
double fpr_deviation_bound_from_h(std::span<const PropOneConstants> hs, long n);

// ---- Aggregated report -------------------------------------------------------

/// Everything the bounds workflow reports for one feature.
struct GuaranteeReport {
  double k1 = 0.0, k2 = 0.0;
  double g1 = 0.0, g2 = 0.0, g3 = 0.0;
  double k_const = 0.0;
  double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0, h5 = 0.0;
  double be_bound = 0.0;
  double ssp_lower_bound = 0.0;  // run-level, repeated per feature for convenience
  double fpr_deviation_bound = 0.0;
  long n = 0;
};

GuaranteeReport guarantee_report(const MomentProfile& m, const BoundConstantsConfig& c, long n);

}  // namespace mfscreen::bounds
