#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace synthtab {

double mean(const std::vector<double>& values);

// Sample standard deviation (n-1 denominator); 0 for a single value.
double sample_std(const std::vector<double>& values);

std::pair<double, double> mean_std(const std::vector<double>& values);

double median(std::vector<double> values);

// Quantile with linear interpolation between order statistics.
// `sorted` must be nondecreasing; p in [0,1].
double quantile_sorted(const std::vector<double>& sorted, double p);

// Convenience: copies, sorts, then interpolates at percentile/100.
double percentile(std::vector<double> values, double pct);

// Pearson correlation; requires both inputs to have nonzero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace synthtab
