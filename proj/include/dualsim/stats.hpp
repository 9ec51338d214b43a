#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dualsim {

struct ErrorSummary {
  std::string mode;
  std::size_t n = 0;
  double mean_error = 0.0;
  double std_error = 0.0;  // sample (n - 1) standard deviation; 0 when n == 1
  double success_rate = 0.0;
};

/// Throws std::invalid_argument on empty input or length mismatch.
ErrorSummary summarize(std::span<const double> errors, const std::vector<bool>& successes,
                       std::string mode = {});

struct WilcoxonResult {
  std::size_t n_effective = 0;  // pairs left after dropping zero differences
  double w_plus = 0.0;
  double w_minus = 0.0;
  double statistic = 0.0;  // min(w_plus, w_minus)
  double p_two_sided = 1.0;
  bool degenerate = false;  // every difference was zero
};

/// Average (mid) ranks of the values, 1-based, ties sharing the mean rank.
std::vector<double> average_ranks(std::span<const double> values);

/// Exact two-sided paired Wilcoxon signed-rank test on d_i = a_i - b_i.
/// Zero differences are dropped and tied magnitudes get average ranks. The p
/// value is P(min(W+, W-) <= observed) over all 2^n equally likely sign
/// assignments of the observed (tied) rank vector, computed exactly by
/// counting rank-sum subsets.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

/// Large-sample normal approximation of the same two-sided p (tie-corrected
/// variance, no continuity correction). Only used as a cross-check.
double wilcoxon_normal_approx_p(std::span<const double> a, std::span<const double> b);

}  // namespace dualsim
