#pragma once

#include <span>
#include <vector>

#include "mfscreen/types.hpp"

namespace mfscreen {

/// Marginal fit of y on one feature column.
///
/// tau_hat = sum (x-mx)(y-my) / sum (x-mx)^2
/// b_hat   = my - tau_hat * mx
/// v_hat   = [ (1/n) sum (x-mx)^2 e_i^2 ] / [ (1/n) sum (x-mx)^2 ]^2,
///           with e_i the fitted residuals
/// score   = sqrt(n) * tau_hat / sqrt(v_hat)
///
/// Means are computed first and all products are centered (two-pass), with
/// compensated accumulation. A constant column (min == max) yields a
/// degenerate fit without performing any division; v_hat == 0 (exact linear
/// relation) yields degenerate = true with tau_hat/b_hat still valid.
///
/// Throws std::invalid_argument on length mismatch or n < 3.
MarginalFit fit_marginal(std::span<const double> x_col, std::span<const double> y,
                         std::size_t feature_index = 0);

/// fit_marginal over every column. Columns may be fitted concurrently
/// (threads == 0 picks the hardware default); results are identical for any
/// worker count since each column is reduced independently in a fixed order.
/// Errors from individual columns are rethrown with the feature index
/// attached.
std::vector<MarginalFit> fit_all(const DataMatrix& data, unsigned threads = 0);

}  // namespace mfscreen
