#include "capflow/pairwise.hpp"

namespace capflow {

namespace {
constexpr std::size_t kLeaf = 32;
}

double pairwise_sum(std::span<const double> x) {
  const std::size_t m = x.size();
  if (m <= kLeaf) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = m / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

double pairwise_mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return pairwise_sum(x) / static_cast<double>(x.size());
}

} // namespace capflow
