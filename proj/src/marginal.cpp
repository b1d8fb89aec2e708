#include "mfscreen/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "mfscreen/kernels.hpp"
#include "mfscreen/parallel.hpp"

namespace mfscreen {

void DataMatrix::validate() const {
  if (n < 3) throw std::invalid_argument("DataMatrix: n must be >= 3");
  if (p < 1) throw std::invalid_argument("DataMatrix: p must be >= 1");
  if (x.size() != n * p) throw std::invalid_argument("DataMatrix: x has wrong size");
  if (y.size() != n) throw std::invalid_argument("DataMatrix: y has wrong size");
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("DataMatrix: non-finite response value");
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("DataMatrix: non-finite feature value");
  }
  if (!feature_names.empty()) {
    if (feature_names.size() != p) {
      throw std::invalid_argument("DataMatrix: feature_names must have exactly p entries");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : feature_names) {
      if (!seen.insert(name).second) {
        throw std::invalid_argument("DataMatrix: duplicate feature name '" + name + "'");
      }
    }
  }
}

MarginalFit fit_marginal(std::span<const double> x_col, std::span<const double> y,
                         std::size_t feature_index) {
  const std::size_t n = x_col.size();
  if (n != y.size()) {
    throw std::invalid_argument("fit_marginal: x and y lengths differ (" + std::to_string(n) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  if (n < 3) throw std::invalid_argument("fit_marginal: need n >= 3");

  MarginalFit fit;
  fit.feature_index = feature_index;

  // A constant column is detected exactly (min == max). The centered sum of
  // squares cannot be trusted for this: the rounded mean can leave identical
  // nonzero offsets on every entry.
  const auto [mn, mx_it] = std::minmax_element(x_col.begin(), x_col.end());
  if (*mn == *mx_it) {
    fit.degenerate = true;
    fit.score = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }

  const double mean_x = kernels::sum(x_col.data(), n) / static_cast<double>(n);
  const double mean_y = kernels::sum(y.data(), n) / static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  kernels::centered_sums(x_col.data(), y.data(), n, mean_x, mean_y, sxx, sxy);
  fit.var_x_n = sxx / static_cast<double>(n);
  if (fit.var_x_n == 0.0) {
    fit.degenerate = true;
    fit.score = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }

  fit.tau_hat = sxy / sxx;
  fit.b_hat = mean_y - fit.tau_hat * mean_x;

  const double wss =
      kernels::weighted_residual_ssq(x_col.data(), y.data(), n, mean_x, mean_y, fit.tau_hat);
  fit.v_hat = (wss / static_cast<double>(n)) / (fit.var_x_n * fit.var_x_n);

  if (fit.v_hat == 0.0) {
    // perfect linear relation: slope and intercept are valid, the score is not
    fit.degenerate = true;
    fit.score = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }

  fit.score = std::sqrt(static_cast<double>(n)) * fit.tau_hat / std::sqrt(fit.v_hat);
  return fit;
}

std::vector<MarginalFit> fit_all(const DataMatrix& data, unsigned threads) {
  data.validate();
  std::vector<MarginalFit> fits(data.p);
  parallel_for_chunks(0, data.p, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      try {
        fits[j] = fit_marginal(data.col(j), data.y, j);
      } catch (const std::exception& e) {
        throw std::runtime_error("fit_all: feature " + std::to_string(j) + ": " + e.what());
      }
    }
  });
  return fits;
}

}  // namespace mfscreen
