// AVX2 variants of the reduction kernels. Four compensated lanes, combined in
// a fixed order, so results are reproducible and within ~1 ulp of the scalar
// reference (the grouping differs, bitwise equality is not promised).

#if defined(MFSCREEN_HAVE_AVX2)

#include <immintrin.h>

#include "mfscreen/kernels.hpp"

namespace mfscreen::kernels::avx2 {

namespace {

struct VecAccumulator {
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();

  inline void add(__m256d v) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d t = _mm256_add_pd(s, v);
    const __m256d s_big = _mm256_cmp_pd(_mm256_and_pd(s, abs_mask), _mm256_and_pd(v, abs_mask),
                                        _CMP_GE_OQ);
    const __m256d big = _mm256_blendv_pd(v, s, s_big);
    const __m256d small = _mm256_blendv_pd(s, v, s_big);
    c = _mm256_add_pd(c, _mm256_add_pd(_mm256_sub_pd(big, t), small));
    s = t;
  }

  // Lanes folded 0,1,2,3 into a scalar compensated accumulator.
  inline void fold_into(Accumulator& out) const {
    alignas(32) double sv[4], cv[4];
    _mm256_store_pd(sv, s);
    _mm256_store_pd(cv, c);
    for (int lane = 0; lane < 4; ++lane) {
      out.add(sv[lane]);
      out.add(cv[lane]);
    }
  }
};

}  // namespace

double sum(const double* v, std::size_t n) {
  VecAccumulator vacc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vacc.add(_mm256_loadu_pd(v + i));
  Accumulator acc;
  vacc.fold_into(acc);
  for (; i < n; ++i) acc.add(v[i]);
  return acc.value();
}

void centered_sums(const double* x, const double* y, std::size_t n, double mx, double my,
                   double& sxx, double& sxy) {
  const __m256d vmx = _mm256_set1_pd(mx);
  const __m256d vmy = _mm256_set1_pd(my);
  VecAccumulator vxx, vxy;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xt = _mm256_sub_pd(_mm256_loadu_pd(x + i), vmx);
    const __m256d yt = _mm256_sub_pd(_mm256_loadu_pd(y + i), vmy);
    vxx.add(_mm256_mul_pd(xt, xt));
    vxy.add(_mm256_mul_pd(xt, yt));
  }
  Accumulator axx, axy;
  vxx.fold_into(axx);
  vxy.fold_into(axy);
  for (; i < n; ++i) {
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
  const __m256d vmx = _mm256_set1_pd(mx);
  const __m256d vmy = _mm256_set1_pd(my);
  const __m256d vtau = _mm256_set1_pd(tau);
  VecAccumulator vacc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xt = _mm256_sub_pd(_mm256_loadu_pd(x + i), vmx);
    const __m256d yt = _mm256_sub_pd(_mm256_loadu_pd(y + i), vmy);
    const __m256d r = _mm256_fnmadd_pd(vtau, xt, yt);  // yt - tau*xt
    const __m256d w = _mm256_mul_pd(xt, r);
    vacc.add(_mm256_mul_pd(w, w));
  }
  Accumulator acc;
  vacc.fold_into(acc);
  for (; i < n; ++i) {
    const double xt = x[i] - mx;
    const double r = (y[i] - my) - tau * xt;
    const double w = xt * r;
    acc.add(w * w);
  }
  return acc.value();
}

}  // namespace mfscreen::kernels::avx2

#endif  // MFSCREEN_HAVE_AVX2
