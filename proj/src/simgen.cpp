#include "mfscreen/simgen.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mfscreen/marginal.hpp"
#include "mfscreen/parallel.hpp"
#include "mfscreen/screening.hpp"

namespace mfscreen {

const char* output_kind_name(OutputKind k) {
  return k == OutputKind::ContinuousHetero ? "continuous" : "discrete";
}

OutputKind output_kind_from_name(const std::string& s) {
  if (s == "continuous") return OutputKind::ContinuousHetero;
  if (s == "discrete" || s == "poisson") return OutputKind::Poisson;
  throw std::invalid_argument("unknown output kind: " + s +
                              " (expected continuous or discrete)");
}

void SimulationDesign::validate() const {
  if (p < 19) throw std::invalid_argument("SimulationDesign: p must be >= 19");
  if (n < 3) throw std::invalid_argument("SimulationDesign: n must be >= 3");
  if (!(std::fabs(rho_signal) < 1.0)) {
    throw std::invalid_argument("SimulationDesign: |rho_signal| must be < 1");
  }
  if (!(std::fabs(rho_noise) < 1.0)) {
    throw std::invalid_argument("SimulationDesign: |rho_noise| must be < 1");
  }
  for (double sd : noise_sds_z3_z6) {
    if (!(sd >= 0.0)) throw std::invalid_argument("SimulationDesign: negative noise sd");
  }
}

TruthLabels TruthLabels::default_for(std::size_t p) {
  TruthLabels t;
  t.m_star.resize(std::min<std::size_t>(14, p));
  std::iota(t.m_star.begin(), t.m_star.end(), 0);
  return t;
}

namespace {

// One AR(1) step per column keeps every column write contiguous and realizes
// Corr(col_i, col_j) = rho^|i-j| with unit marginal variance.
void fill_ar1_block(DataMatrix& out, std::size_t first_col, std::size_t last_col, double rho,
                    Rng& rng) {
  const std::size_t n = out.n;
  const double innov = std::sqrt(1.0 - rho * rho);
  double* head = out.col_data(first_col);
  for (std::size_t i = 0; i < n; ++i) head[i] = rng.normal();
  for (std::size_t j = first_col + 1; j <= last_col; ++j) {
    const double* prev = out.col_data(j - 1);
    double* cur = out.col_data(j);
    for (std::size_t i = 0; i < n; ++i) cur[i] = rho * prev[i] + innov * rng.normal();
  }
}

}  // namespace

void gen_explanatory(const SimulationDesign& design, Rng& rng, DataMatrix& out) {
  design.validate();
  const std::size_t n = design.n;
  const std::size_t p = design.p;
  out.n = n;
  out.p = p;
  out.x.resize(n * p);
  if (out.feature_names.size() != p) {
    out.feature_names.resize(p);
    for (std::size_t j = 0; j < p; ++j) out.feature_names[j] = "X" + std::to_string(j + 1);
  }

  // columns 0..4: correlated signal Gaussians
  fill_ar1_block(out, 0, 4, design.rho_signal, rng);

  double* c5 = out.col_data(5);
  for (std::size_t i = 0; i < n; ++i) c5[i] = rng.bernoulli(0.35) ? 1.0 : 0.0;
  double* c6 = out.col_data(6);
  for (std::size_t i = 0; i < n; ++i) c6[i] = rng.chi_square(2);
  {
    const double* base = out.col_data(0);
    double* c7 = out.col_data(7);
    for (std::size_t i = 0; i < n; ++i) {
      c7[i] = base[i] * static_cast<double>(rng.poisson(2.0));
    }
  }
  {
    const double* base = out.col_data(1);
    double* c8 = out.col_data(8);
    for (std::size_t i = 0; i < n; ++i) c8[i] = base[i] * rng.normal(1.0, 1.0);
  }
  double* c9 = out.col_data(9);
  for (std::size_t i = 0; i < n; ++i) c9[i] = rng.student_t(14);

  // Z3..Z6 land directly in columns 14..17; columns 10..13 add them onto the
  // signal Gaussians they shadow.
  static constexpr std::size_t kShadowSource[4] = {0, 2, 3, 4};
  for (std::size_t k = 0; k < 4; ++k) {
    const double sd = design.noise_sds_z3_z6[k];
    double* z = out.col_data(14 + k);
    for (std::size_t i = 0; i < n; ++i) z[i] = rng.normal(0.0, sd);
    const double* base = out.col_data(kShadowSource[k]);
    double* noisy = out.col_data(10 + k);
    for (std::size_t i = 0; i < n; ++i) noisy[i] = base[i] + z[i];
  }

  // columns 18..p-1: independent stationary Gaussian block
  fill_ar1_block(out, 18, p - 1, design.rho_noise, rng);
}

std::vector<double> linear_terms(const DataMatrix& x, const std::array<double, 11>& theta) {
  if (x.p < 10) throw std::invalid_argument("linear_terms: need at least 10 columns");
  std::vector<double> lin(x.n, theta[0]);
  for (std::size_t k = 0; k < 10; ++k) {
    const double* col = x.x.data() + k * x.n;
    const double w = theta[k + 1];
    for (std::size_t i = 0; i < x.n; ++i) lin[i] += w * col[i];
  }
  return lin;
}

std::vector<double> gen_response(const DataMatrix& x, const SimulationDesign& design, Rng& rng) {
  std::vector<double> lin = linear_terms(x, design.theta_star);
  std::vector<double> y(x.n);
  if (design.output_kind == OutputKind::ContinuousHetero) {
    const double* x5 = x.x.data() + 4 * x.n;
    for (std::size_t i = 0; i < x.n; ++i) {
      const double eps = rng.chi_square(3) - 3.0;
      y[i] = std::pow(std::fabs(lin[i]), 0.8) + x5[i] * eps / 3.0;
    }
  } else {
    for (std::size_t i = 0; i < x.n; ++i) {
      y[i] = static_cast<double>(rng.poisson(std::fabs(lin[i])));
    }
  }
  return y;
}

namespace {

struct ReplicateOutcome {
  std::vector<std::uint8_t> selected;
  double tpr = 0.0;
  double fpr = 0.0;
  double n_selected = 0.0;
};

}  // namespace

MonteCarloSummary run_monte_carlo(const SimulationDesign& design, double q,
                                  std::size_t n_replicates, unsigned threads) {
  design.validate();
  if (n_replicates < 1) throw std::invalid_argument("run_monte_carlo: need n_replicates >= 1");
  const ScreeningConfig config = ScreeningConfig::from_q(q);
  const TruthLabels labels = TruthLabels::default_for(design.p);
  const std::size_t m_star_size = labels.m_star.size();
  const std::size_t null_size = design.p - m_star_size;

  std::vector<ReplicateOutcome> slots(n_replicates);
  parallel_for_chunks(0, n_replicates, threads, [&](std::size_t lo, std::size_t hi) {
    DataMatrix workspace;  // one allocation per worker
    for (std::size_t r = lo; r < hi; ++r) {
      Rng rng(child_seed(design.seed, r));
      gen_explanatory(design, rng, workspace);
      workspace.y = gen_response(workspace, design, rng);
      const auto fits = fit_all(workspace, 1);
      const auto result = screen(fits, config, &workspace.feature_names);

      ReplicateOutcome& slot = slots[r];
      slot.selected.assign(design.p, 0);
      std::size_t true_pos = 0, false_pos = 0;
      for (std::size_t idx : result.selected) {
        slot.selected[idx] = 1;
        if (idx < m_star_size) {
          ++true_pos;
        } else {
          ++false_pos;
        }
      }
      slot.tpr = m_star_size ? static_cast<double>(true_pos) / m_star_size : 0.0;
      slot.fpr = null_size ? static_cast<double>(false_pos) / null_size : 0.0;
      slot.n_selected = static_cast<double>(result.n_selected);
    }
  });

  MonteCarloSummary summary;
  summary.design = design;
  summary.q = q;
  summary.n_replicates = n_replicates;
  summary.selection_frequency.assign(design.p, 0.0);
  for (const auto& slot : slots) {
    for (std::size_t j = 0; j < design.p; ++j) summary.selection_frequency[j] += slot.selected[j];
    summary.tpr += slot.tpr;
    summary.fpr += slot.fpr;
    summary.mean_selected += slot.n_selected;
  }
  const double inv = 1.0 / static_cast<double>(n_replicates);
  for (double& f : summary.selection_frequency) f *= inv;
  summary.tpr *= inv;
  summary.fpr *= inv;
  summary.mean_selected *= inv;
  return summary;
}

double null_calibration(std::size_t p, std::size_t n, double q, std::size_t n_replicates,
                        std::uint64_t seed, unsigned threads) {
  if (p < 1 || n < 3) throw std::invalid_argument("null_calibration: invalid dimensions");
  if (n_replicates < 1) throw std::invalid_argument("null_calibration: need n_replicates >= 1");
  const ScreeningConfig config = ScreeningConfig::from_q(q);

  std::vector<double> fpr(n_replicates, 0.0);
  parallel_for_chunks(0, n_replicates, threads, [&](std::size_t lo, std::size_t hi) {
    DataMatrix workspace;
    workspace.n = n;
    workspace.p = p;
    for (std::size_t r = lo; r < hi; ++r) {
      Rng rng(child_seed(seed, r));
      workspace.x.resize(n * p);
      for (double& v : workspace.x) v = rng.normal();
      workspace.y.resize(n);
      for (double& v : workspace.y) v = rng.normal();
      const auto fits = fit_all(workspace, 1);
      const auto result = screen(fits, config);
      fpr[r] = static_cast<double>(result.n_selected) / static_cast<double>(p);
    }
  });

  double total = 0.0;
  for (double v : fpr) total += v;
  return total / static_cast<double>(n_replicates);
}

}  // namespace mfscreen
