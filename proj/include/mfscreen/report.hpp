#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mfscreen/screening.hpp"
#include "mfscreen/simgen.hpp"
#include "mfscreen/types.hpp"

namespace mfscreen {

/// Locale-independent shortest-form decimal with 12 significant digits;
/// "nan"/"inf" spelled out.
std::string format_double(double v);

/// Quantile by linear interpolation between order statistics:
/// position h*(m-1) in the sorted sample. `sorted` must be ascending.
double quantile_sorted(const std::vector<double>& sorted, double h);

/// Five-number summary (plus the 90% quantile) of the |score| distribution
/// over non-degenerate fits, alongside the threshold in force.
struct ScoreDistribution {
  std::size_t count = 0;
  double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, q90 = 0.0, max = 0.0;
  double threshold = 0.0;
};

ScoreDistribution score_distribution(const ScreeningResult& result);

/// CSV: rank,feature,score,abs_score,selected,degenerate — descending
/// |score|, degenerate fits last.
void emit_score_table(const ScreeningResult& result, std::ostream& dest);

/// Re-reads an emitted score table (round-trip checks and downstream use).
std::vector<ScoreRow> read_score_table(std::istream& src);

/// CSV: index,name,selection_frequency
void emit_frequencies(const MonteCarloSummary& summary, std::ostream& dest);

// JSON documents (stable field names, dot decimal separator).
std::string screen_summary_json(const ScreeningResult& result, const ScoreDistribution& dist,
                                std::size_t n, std::size_t p);
std::string simulate_summary_json(const MonteCarloSummary& summary);

}  // namespace mfscreen
