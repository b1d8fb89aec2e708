#pragma once

#include <cstddef>
#include <string>

// Reduction kernels for the per-column statistics. Every kernel exists as a
// scalar reference and, on x86-64, an AVX2 variant; the public entry points
// dispatch to the best supported implementation (override with force_isa or
// the MFSCREEN_KERNEL environment variable, values "scalar"/"avx2").
//
// All kernels accumulate with Neumaier-compensated summation so results stay
// near working precision even for large n and badly shifted data. The scalar
// and SIMD variants may differ in the last bits (different reduction
// grouping); they are equivalence-tested against each other at 1e-13.

namespace mfscreen::kernels {

enum class Isa { Scalar, Avx2 };

Isa active_isa();
bool isa_supported(Isa isa);
void force_isa(Isa isa);            // throws std::invalid_argument if unsupported
const char* isa_name(Isa isa);
Isa isa_from_name(const std::string& name);  // "scalar" | "avx2"

/// sum of v[0..n)
double sum(const double* v, std::size_t n);

/// sxx = sum (x-mx)^2, sxy = sum (x-mx)*(y-my)
void centered_sums(const double* x, const double* y, std::size_t n, double mx, double my,
                   double& sxx, double& sxy);

/// sum (x-mx)^2 * ((y-my) - tau*(x-mx))^2
double weighted_residual_ssq(const double* x, const double* y, std::size_t n, double mx,
                             double my, double tau);

// Fixed-implementation variants, used by the equivalence tests.
namespace scalar {
double sum(const double* v, std::size_t n);
void centered_sums(const double* x, const double* y, std::size_t n, double mx, double my,
                   double& sxx, double& sxy);
double weighted_residual_ssq(const double* x, const double* y, std::size_t n, double mx,
                             double my, double tau);
}  // namespace scalar

#if defined(MFSCREEN_HAVE_AVX2)
namespace avx2 {
double sum(const double* v, std::size_t n);
void centered_sums(const double* x, const double* y, std::size_t n, double mx, double my,
                   double& sxx, double& sxy);
double weighted_residual_ssq(const double* x, const double* y, std::size_t n, double mx,
                             double my, double tau);
}  // namespace avx2
#endif

/// Neumaier-compensated accumulator, shared by the scalar kernels and the
/// moment estimators.
struct Accumulator {
  double s = 0.0;
  double c = 0.0;

  void add(double v) {
    const double t = s + v;
    if ((s >= 0 ? s : -s) >= (v >= 0 ? v : -v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }

  double value() const { return s + c; }
};

}  // namespace mfscreen::kernels
