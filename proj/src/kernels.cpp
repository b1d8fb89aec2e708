#include "mfscreen/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mfscreen::kernels {

namespace {

Isa detect_isa() {
#if defined(MFSCREEN_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) {
    if (const char* env = std::getenv("MFSCREEN_KERNEL")) {
      if (std::string(env) == "scalar") return Isa::Scalar;
    }
    return Isa::Avx2;
  }
#endif
  return Isa::Scalar;
}

Isa& current_isa() {
  static Isa isa = detect_isa();
  return isa;
}

}  // namespace

Isa active_isa() { return current_isa(); }

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(MFSCREEN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument(std::string("kernel ISA not supported on this host: ") +
                                isa_name(isa));
  }
  current_isa() = isa;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa isa_from_name(const std::string& name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  throw std::invalid_argument("unknown kernel ISA: " + name + " (expected scalar or avx2)");
}

double sum(const double* v, std::size_t n) {
#if defined(MFSCREEN_HAVE_AVX2)
  if (current_isa() == Isa::Avx2) return avx2::sum(v, n);
#endif
  return scalar::sum(v, n);
}

void centered_sums(const double* x, const double* y, std::size_t n, double mx, double my,
                   double& sxx, double& sxy) {
#if defined(MFSCREEN_HAVE_AVX2)
  if (current_isa() == Isa::Avx2) {
    avx2::centered_sums(x, y, n, mx, my, sxx, sxy);
    return;
  }
#endif
  scalar::centered_sums(x, y, n, mx, my, sxx, sxy);
}

double weighted_residual_ssq(const double* x, const double* y, std::size_t n, double mx,
                             double my, double tau) {
#if defined(MFSCREEN_HAVE_AVX2)
  if (current_isa() == Isa::Avx2) return avx2::weighted_residual_ssq(x, y, n, mx, my, tau);
#endif
  return scalar::weighted_residual_ssq(x, y, n, mx, my, tau);
}

}  // namespace mfscreen::kernels
