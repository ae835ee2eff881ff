#include "synthtab/stats.hpp"

#include <algorithm>
#include <cmath>

#include "synthtab/errors.hpp"

namespace synthtab {

double mean(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("mean of empty list");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double sample_std(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("std of empty list");
    if (values.size() == 1) return 0.0;
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
    return {mean(values), sample_std(values)};
}

double median(std::vector<double> values) {
    if (values.empty()) throw ValidationError("median of empty list");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw ValidationError("quantile of empty list");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double percentile(std::vector<double> values, double pct) {
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, pct / 100.0);
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ValidationError("pearson requires two equal-length samples of size >= 2");
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw ValidationError("pearson undefined for zero-variance sample");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace synthtab
