#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace schemasim {

class EmptySampleError : public std::invalid_argument {
 public:
  EmptySampleError() : std::invalid_argument("summary statistics of an empty sample") {}
};

/// Box-plot summary of a sample.
///
/// Quantiles interpolate linearly between order statistics: with the sample
/// sorted as x[0..n-1], the p-quantile is x[j] + (h - j) * (x[j+1] - x[j]) for
/// h = (n - 1) * p and j = floor(h). Whiskers sit at q1 - 1.5|iqr| and
/// q3 + 1.5|iqr|; outliers are the values strictly outside them, in ascending
/// order, and still count towards mean and median.
struct Stats {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  std::vector<double> outliers;
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

/// p-quantile of an ascending, non-empty sample.
double quantile_sorted(std::span<const double> sorted, double p);

/// Arithmetic mean, computed as min + mean(x - min) with the offsets summed in
/// ascending order: independent of the order of `values` and exact when all
/// values are equal.
double mean_of(std::span<const double> values);

/// Throws EmptySampleError for an empty sample.
Stats summarize(std::span<const double> values);

}  // namespace schemasim
