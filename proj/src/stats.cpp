#include "dualsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dualsim {

ErrorSummary summarize(std::span<const double> errors, const std::vector<bool>& successes,
                       std::string mode) {
  if (errors.empty()) throw std::invalid_argument("summarize: empty error list");
  if (successes.size() != errors.size()) {
    throw std::invalid_argument("summarize: errors and successes differ in length");
  }
  ErrorSummary s;
  s.mode = std::move(mode);
  s.n = errors.size();
  const double n = static_cast<double>(s.n);
  s.mean_error = std::accumulate(errors.begin(), errors.end(), 0.0) / n;
  if (s.n > 1) {
    double ss = 0.0;
    for (double e : errors) ss += (e - s.mean_error) * (e - s.mean_error);
    s.std_error = std::sqrt(ss / (n - 1.0));
  }
  s.success_rate =
      static_cast<double>(std::count(successes.begin(), successes.end(), true)) / n;
  return s;
}

namespace {

// Twice the average rank of each value, as an exact integer.
std::vector<long long> doubled_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<long long> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share rank ((i+1) + (j+1)) / 2
    const auto r2 = static_cast<long long>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r2;
    i = j + 1;
  }
  return ranks;
}

struct SignedDiffs {
  std::vector<double> magnitude;
  std::vector<bool> positive;
};

SignedDiffs nonzero_differences(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("wilcoxon: paired lists differ in length");
  SignedDiffs out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (std::isnan(d)) throw std::invalid_argument("wilcoxon: NaN difference");
    if (d == 0.0) continue;
    out.magnitude.push_back(std::abs(d));
    out.positive.push_back(d > 0.0);
  }
  return out;
}

}  // namespace

std::vector<double> average_ranks(std::span<const double> values) {
  const auto r2 = doubled_ranks(values);
  std::vector<double> out(r2.size());
  std::transform(r2.begin(), r2.end(), out.begin(),
                 [](long long r) { return static_cast<double>(r) / 2.0; });
  return out;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
  const auto diffs = nonzero_differences(a, b);
  WilcoxonResult res;
  res.n_effective = diffs.magnitude.size();
  if (res.n_effective == 0) {
    res.degenerate = true;
    res.p_two_sided = 1.0;
    return res;
  }

  const auto r2 = doubled_ranks(diffs.magnitude);
  long long plus2 = 0;
  long long total2 = 0;
  for (std::size_t i = 0; i < r2.size(); ++i) {
    total2 += r2[i];
    if (diffs.positive[i]) plus2 += r2[i];
  }
  const long long minus2 = total2 - plus2;
  res.w_plus = static_cast<double>(plus2) / 2.0;
  res.w_minus = static_cast<double>(minus2) / 2.0;
  res.statistic = std::min(res.w_plus, res.w_minus);

  // count[s] = number of sign assignments whose doubled W+ equals s. Counts
  // stay exact in double up to n = 53.
  std::vector<double> count(static_cast<std::size_t>(total2) + 1, 0.0);
  count[0] = 1.0;
  long long reach = 0;
  for (long long r : r2) {
    for (long long s = reach; s >= 0; --s) {
      if (count[static_cast<std::size_t>(s)] != 0.0) {
        count[static_cast<std::size_t>(s + r)] += count[static_cast<std::size_t>(s)];
      }
    }
    reach += r;
  }

  const long long observed2 = std::min(plus2, minus2);
  double extreme = 0.0;
  for (long long s = 0; s <= total2; ++s) {
    if (std::min(s, total2 - s) <= observed2) extreme += count[static_cast<std::size_t>(s)];
  }
  const double p = std::ldexp(extreme, -static_cast<int>(res.n_effective));
  res.p_two_sided = std::min(p, 1.0);
  return res;
}

double wilcoxon_normal_approx_p(std::span<const double> a, std::span<const double> b) {
  const auto diffs = nonzero_differences(a, b);
  const auto n = static_cast<double>(diffs.magnitude.size());
  if (n == 0.0) return 1.0;
  const auto r2 = doubled_ranks(diffs.magnitude);
  double w_plus = 0.0;
  for (std::size_t i = 0; i < r2.size(); ++i) {
    if (diffs.positive[i]) w_plus += static_cast<double>(r2[i]) / 2.0;
  }
  // Tie correction: sum over tie groups of (t^3 - t) / 48.
  auto sorted = r2;
  std::sort(sorted.begin(), sorted.end());
  double tie = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie += (t * t * t - t) / 48.0;
    i = j;
  }
  const double mean = n * (n + 1.0) / 4.0;
  const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie;
  if (var <= 0.0) return 1.0;
  const double z = std::abs(w_plus - mean) / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

}  // namespace dualsim
