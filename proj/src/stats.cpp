#include "schemasim/stats.hpp"

#include <algorithm>
#include <cmath>

namespace schemasim {

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw EmptySampleError();
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto j = static_cast<std::size_t>(std::floor(h));
  if (j + 1 >= sorted.size()) return sorted.back();
  return sorted[j] + (h - static_cast<double>(j)) * (sorted[j + 1] - sorted[j]);
}

namespace {

// min + mean of the offsets from min, summed in ascending order. Exact for
// constant samples.
double sorted_mean(std::span<const double> sorted) {
  double sum = 0.0;
  for (double v : sorted) sum += v - sorted.front();
  return sorted.front() + sum / static_cast<double>(sorted.size());
}

}  // namespace

double mean_of(std::span<const double> values) {
  if (values.empty()) throw EmptySampleError();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_mean(sorted);
}

Stats summarize(std::span<const double> values) {
  if (values.empty()) throw EmptySampleError();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  Stats s;
  s.n = sorted.size();
  s.mean = sorted_mean(sorted);
  s.median = quantile_sorted(sorted, 0.5);
  s.q1 = quantile_sorted(sorted, 0.25);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.iqr = s.q3 - s.q1;
  s.whisker_lo = s.q1 - 1.5 * std::fabs(s.iqr);
  s.whisker_hi = s.q3 + 1.5 * std::fabs(s.iqr);
  for (double v : sorted) {
    if (v < s.whisker_lo || v > s.whisker_hi) s.outliers.push_back(v);
  }
  s.min = sorted.front();
  s.max = sorted.back();
  return s;
}

}  // namespace schemasim
