#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mfscreen/types.hpp"

namespace mfscreen {

/// gamma = Phi^{-1}(1 - q/2) for q in (0,1). Throws std::domain_error.
double gamma_from_q(double q);

/// q = 2*(1 - Phi(gamma)) for gamma >= 0. Throws std::domain_error.
double q_from_gamma(double gamma);

/// Threshold configuration. Exactly one of q / gamma is given by the caller;
/// the other is derived through the Gaussian quantile.
struct ScreeningConfig {
  double q = 0.0;
  double gamma = 0.0;
  bool two_sided = true;  // the rule compares |score|; kept explicit

  static ScreeningConfig from_q(double q);
  static ScreeningConfig from_gamma(double gamma);
};

struct ScoreRow {
  std::size_t index = 0;
  std::string name;
  double score = 0.0;
  double abs_score = 0.0;
  bool selected = false;
  bool degenerate = false;
};

struct ScreeningResult {
  ScreeningConfig config;
  std::vector<std::size_t> selected;  // sorted by descending |score|
  std::vector<ScoreRow> scores;       // all features, descending |score|, degenerate last
  std::size_t n_selected = 0;
};

/// Keep feature j iff its fit is non-degenerate and |score_j| >= gamma
/// (ties at the threshold are kept). Degenerate fits are reported in the
/// table, never selected. Tie order in the table: descending |score|, then
/// ascending index.
ScreeningResult screen(const std::vector<MarginalFit>& fits, const ScreeningConfig& config,
                       const std::vector<std::string>* names = nullptr);

/// Idealized expected |M-hat|: every active feature detected, nulls selected
/// at rate q. Benchmark value for Monte Carlo summaries.
double expected_selection_size(std::size_t p, std::size_t m_star, double q);

}  // namespace mfscreen
