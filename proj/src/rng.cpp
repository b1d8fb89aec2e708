#include "mfscreen/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "mfscreen/gaussian.hpp"

namespace mfscreen {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * kGoldenGamma);
}

Rng::Rng(std::uint64_t seed) {
  // splitmix64 state expansion
  std::uint64_t z = seed;
  for (auto& word : s_) {
    z += kGoldenGamma;
    word = mix64(z);
  }
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGoldenGamma;
}

std::uint64_t Rng::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform01() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() { return normal_quantile(uniform01()); }

double Rng::normal(double mean, double sd) { return mean + sd * normal(); }

double Rng::chi_square(int k) {
  if (k < 1) throw std::invalid_argument("chi_square: k must be >= 1");
  double s = 0.0;
  for (int i = 0; i < k; ++i) {
    const double z = normal();
    s += z * z;
  }
  return s;
}

double Rng::student_t(int k) {
  if (k < 1) throw std::invalid_argument("student_t: k must be >= 1");
  return normal() / std::sqrt(chi_square(k) / static_cast<double>(k));
}

std::uint64_t Rng::poisson(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("poisson: lambda must be >= 0");
  if (lambda == 0.0) return 0;

  if (lambda < 30.0) {
    // sequential inversion
    const double p0 = std::exp(-lambda);
    double p = p0;
    double f = p0;
    const double u = uniform01();
    std::uint64_t k = 0;
    while (u > f) {
      ++k;
      p *= lambda / static_cast<double>(k);
      f += p;
      if (k > 1000) break;  // cumulative mass numerically exhausted
    }
    return k;
  }

  // Hormann's transformed rejection (PTRD), valid for lambda >= 10.
  const double smu = std::sqrt(lambda);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    double u = uniform01() - 0.5;
    double v = uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * std::log(lambda) - lambda - std::lgamma(kf + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
  }
}

bool Rng::bernoulli(double p) { return uniform01() < p; }

}  // namespace mfscreen
