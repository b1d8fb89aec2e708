#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mfscreen/rng.hpp"
#include "mfscreen/types.hpp"

namespace mfscreen {

enum class OutputKind { ContinuousHetero, Poisson };

const char* output_kind_name(OutputKind k);
OutputKind output_kind_from_name(const std::string& s);  // "continuous" | "discrete"

/// Generative design for the simulation study. Columns (0-based):
///   0..4    correlated standard Gaussians, Corr(i,j) = rho_signal^|i-j|
///   5       Bernoulli(0.35)
///   6       chi-square(2)
///   7       col0 * Poisson(2)
///   8       col1 * N(1,1)
///   9       Student t(14)
///   10..13  col0+Z3, col2+Z4, col3+Z5, col4+Z6  (noisy copies)
///   14..17  Z3, Z4, Z5, Z6                      (decoys, independent of Y)
///   18..p-1 stationary Gaussian block, Corr = rho_noise^|i-j|, independent
///           of everything else
/// Z3..Z6 are centered Gaussians whose standard deviations default to
/// sqrt(0.4), sqrt(0.02), sqrt(0.35), sqrt(0.55) (the design's N(0,v)
/// parameters are variances).
///
/// The response uses columns 0..9 only:
///   continuous: Y = |theta . (1, X0..X9)|^0.8 + X4 * (chisq(3) - 3) / 3
///   poisson:    Y ~ Poisson(|theta . (1, X0..X9)|)
struct SimulationDesign {
  std::size_t p = 2000;
  std::size_t n = 0;
  double rho_signal = 0.57;
  double rho_noise = 0.7;
  std::array<double, 11> theta_star = {-1.0, 3.619350, -3.274923, 2.963273, -2.681280,
                                       2.0,  4.0,      6.0,      3.0,      2.0,
                                       4.0};
  OutputKind output_kind = OutputKind::ContinuousHetero;
  std::array<double, 4> noise_sds_z3_z6 = {std::sqrt(0.4), std::sqrt(0.02), std::sqrt(0.35),
                                           std::sqrt(0.55)};
  std::uint64_t seed = 0;

  /// p >= 19, n >= 3, |rho| < 1 for both blocks. Throws std::invalid_argument.
  void validate() const;
};

/// Which features count as true positives: indices 0..13 by construction.
struct TruthLabels {
  std::vector<std::size_t> m_star;

  static TruthLabels default_for(std::size_t p);
};

struct MonteCarloSummary {
  std::vector<double> selection_frequency;  // length p
  double tpr = 0.0;            // mean over replicates of |sel ∩ M*| / |M*|
  double fpr = 0.0;            // mean over replicates of |sel ∩ M*^c| / |M*^c|
  double mean_selected = 0.0;  // mean |sel|
  std::size_t n_replicates = 0;
  SimulationDesign design;
  double q = 0.0;
};

/// Fills `out` (resized to design.n x design.p, names X1..Xp) column block by
/// column block in the documented order; the draw sequence is part of the
/// determinism contract.
void gen_explanatory(const SimulationDesign& design, Rng& rng, DataMatrix& out);

/// theta . (1, X0..X9) per row; the shared signal of both output models.
std::vector<double> linear_terms(const DataMatrix& x, const std::array<double, 11>& theta);

/// Response vector per design.output_kind; consumes draws row by row.
std::vector<double> gen_response(const DataMatrix& x, const SimulationDesign& design, Rng& rng);

/// Runs n_replicates independent replicates (replicate r is seeded with
/// child_seed(design.seed, r)), screens each at rate q, and aggregates.
/// Deterministic for any worker count.
MonteCarloSummary run_monte_carlo(const SimulationDesign& design, double q,
                                  std::size_t n_replicates, unsigned threads = 0);

/// Empirical FPR on a pure-null design (all features and the response i.i.d.
/// standard normal). Throws std::invalid_argument on zero replicates.
double null_calibration(std::size_t p, std::size_t n, double q, std::size_t n_replicates,
                        std::uint64_t seed, unsigned threads = 0);

}  // namespace mfscreen
