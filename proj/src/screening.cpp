#include "mfscreen/screening.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mfscreen/gaussian.hpp"

namespace mfscreen {

double gamma_from_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("gamma_from_q: q must lie in (0,1)");
  // Phi^{-1}(1 - q/2) = -Phi^{-1}(q/2); the right tail evaluated on the left
  // keeps full precision for tiny q.
  return -normal_quantile(q / 2.0);
}

double q_from_gamma(double gamma) {
  if (!(gamma >= 0.0)) throw std::domain_error("q_from_gamma: gamma must be >= 0");
  // 2*(1 - Phi(gamma)) without cancellation
  return std::erfc(gamma / std::sqrt(2.0));
}

ScreeningConfig ScreeningConfig::from_q(double q) {
  ScreeningConfig c;
  c.q = q;
  c.gamma = gamma_from_q(q);
  return c;
}

ScreeningConfig ScreeningConfig::from_gamma(double gamma) {
  ScreeningConfig c;
  c.gamma = gamma;
  c.q = q_from_gamma(gamma);
  return c;
}

ScreeningResult screen(const std::vector<MarginalFit>& fits, const ScreeningConfig& config,
                       const std::vector<std::string>* names) {
  if (fits.empty()) throw std::invalid_argument("screen: no fits");
  if (names && names->size() != fits.size()) {
    throw std::invalid_argument("screen: names length mismatch");
  }

  ScreeningResult result;
  result.config = config;
  result.scores.reserve(fits.size());
  for (const auto& fit : fits) {
    ScoreRow row;
    row.index = fit.feature_index;
    row.name = names ? (*names)[fit.feature_index] : ("f" + std::to_string(fit.feature_index));
    row.degenerate = fit.degenerate;
    row.score = fit.score;
    row.abs_score = fit.degenerate ? std::numeric_limits<double>::quiet_NaN()
                                   : std::fabs(fit.score);
    row.selected = !fit.degenerate && row.abs_score >= config.gamma;
    result.scores.push_back(std::move(row));
  }

  std::sort(result.scores.begin(), result.scores.end(), [](const ScoreRow& a, const ScoreRow& b) {
    if (a.degenerate != b.degenerate) return b.degenerate;  // degenerate rows last
    if (!a.degenerate && a.abs_score != b.abs_score) return a.abs_score > b.abs_score;
    return a.index < b.index;
  });

  for (const auto& row : result.scores) {
    if (row.selected) result.selected.push_back(row.index);
  }
  result.n_selected = result.selected.size();
  return result;
}

double expected_selection_size(std::size_t p, std::size_t m_star, double q) {
  if (m_star > p) throw std::invalid_argument("expected_selection_size: m_star > p");
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("expected_selection_size: q outside (0,1)");
  return static_cast<double>(m_star) + q * static_cast<double>(p - m_star);
}

}  // namespace mfscreen
