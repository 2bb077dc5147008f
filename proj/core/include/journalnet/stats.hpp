#pragma once

#include <span>
#include <vector>

namespace journalnet {

/// Percentile of an ascending-sorted sample by linear interpolation at rank
/// p * (n - 1), p in [0, 1].
double percentile_sorted(std::span<const double> sorted, double p);

double median_sorted(std::span<const double> sorted);

/// Pearson correlation; NaN when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Ranks with ties averaged (1-based fractional ranks).
std::vector<double> fractional_ranks(std::span<const double> values);

/// Spearman rank correlation; NaN when either side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace journalnet
