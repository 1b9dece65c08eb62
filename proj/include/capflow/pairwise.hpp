#pragma once

#include <cstddef>
#include <span>

namespace capflow {

/// Deterministic pairwise summation. The reduction tree depends only on the
/// length, so results are reproducible across runs and independent of any
/// execution backend.
double pairwise_sum(std::span<const double> x);

/// Pairwise-summed mean; 0 for empty input.
double pairwise_mean(std::span<const double> x);

} // namespace capflow
