#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfscreen {

/// Parsing or value errors while reading external data files.
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A moment required as a denominator in a bound formula vanished.
class DegenerateProfileError : public std::runtime_error {
 public:
  DegenerateProfileError(std::string norm, std::optional<std::size_t> feature = std::nullopt)
      : std::runtime_error(feature ? ("degenerate profile for feature " + std::to_string(*feature) +
                                      ": " + norm + " = 0")
                                   : ("degenerate profile: " + norm + " = 0")),
        norm_(std::move(norm)),
        feature_(feature) {}

  const std::string& norm() const { return norm_; }
  std::optional<std::size_t> feature() const { return feature_; }

 private:
  std::string norm_;
  std::optional<std::size_t> feature_;
};

/// Wide data set: n samples of p explanatory variables plus the response.
/// Feature j occupies the contiguous range x[j*n .. (j+1)*n) (column-major),
/// so per-feature scans touch memory linearly.
struct DataMatrix {
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<double> x;                        // column-major, size n*p
  std::vector<double> y;                        // size n
  std::vector<std::string> feature_names;       // empty, or exactly p distinct names

  std::span<const double> col(std::size_t j) const { return {x.data() + j * n, n}; }
  double* col_data(std::size_t j) { return x.data() + j * n; }

  std::string name_of(std::size_t j) const {
    return feature_names.empty() ? ("f" + std::to_string(j)) : feature_names[j];
  }

  /// Checks the structural invariants: n >= 3, sizes consistent, all entries
  /// finite, names (when present) distinct. Throws std::invalid_argument.
  void validate() const;
};

/// Marginal least-squares fit of the response on one feature column, with the
/// heteroscedasticity-robust variance of sqrt(n)*tau_hat and the studentized
/// score. Degenerate fits (zero feature variance, or zero robust variance)
/// carry score = NaN and must never be compared against a threshold.
struct MarginalFit {
  std::size_t feature_index = 0;
  double tau_hat = 0.0;   // slope
  double b_hat = 0.0;     // intercept
  double v_hat = 0.0;     // robust variance of sqrt(n)*tau_hat, >= 0
  double score = 0.0;     // sqrt(n)*tau_hat/sqrt(v_hat); NaN when degenerate
  double var_x_n = 0.0;   // (1/n) * sum (x_i - mean)^2
  bool degenerate = false;
};

}  // namespace mfscreen
