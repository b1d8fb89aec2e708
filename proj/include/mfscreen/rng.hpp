#pragma once

#include <cstdint>

// Self-contained random variate generation: the stream layout and every
// distribution recipe are fixed here, so a (seed, design) pair reproduces
// the same numbers on any platform and standard library.

namespace mfscreen {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Counter-based child stream derivation: replicate r of a run seeded with
/// `master` uses mix64(master + (r+1)*golden_gamma). Children never overlap
/// and can be consumed in any order.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t index);

/// xoshiro256++ engine, state expanded from the seed with splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform on the open interval (0,1): ((u >> 11) + 0.5) * 2^-53.
  double uniform01();

  /// Standard normal by quantile inversion of uniform01.
  double normal();
  double normal(double mean, double sd);

  /// Chi-square with k degrees of freedom, as a sum of k squared normals.
  double chi_square(int k);

  /// Student t(k) = N(0,1) / sqrt(chi_square(k)/k).
  double student_t(int k);

  /// Poisson(lambda): sequential inversion for lambda < 30, transformed
  /// rejection (PTRD) above. lambda == 0 returns 0.
  std::uint64_t poisson(double lambda);

  bool bernoulli(double p);

 private:
  std::uint64_t s_[4];
};

}  // namespace mfscreen
