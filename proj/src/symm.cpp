#include "capflow/symm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace capflow::symm {

void CurvatureVector::validate() const {
  if (n() < 2) throw std::domain_error("CurvatureVector: need n >= 2");
  for (double x : kappa)
    if (!std::isfinite(x)) throw std::domain_error("CurvatureVector: non-finite entry");
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

std::vector<double> elementary_all(std::span<const double> values, int kmax) {
  std::vector<double> e(static_cast<std::size_t>(kmax) + 1, 0.0);
  e[0] = 1.0;
  int seen = 0;
  for (double x : values) {
    ++seen;
    for (int j = std::min(kmax, seen); j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

namespace {

void check_k_range(const CurvatureVector& kv, int k) {
  if (k < 0 || k > kv.n())
    throw std::domain_error("sigma_k: k out of range [0, n]");
}

// k-th root of a positive value, exact branches for the common orders.
double kth_root(double x, int k) {
  if (k == 1) return x;
  if (k == 2) return std::sqrt(x);
  return std::pow(x, 1.0 / static_cast<double>(k));
}

} // namespace

double sigma_k(const CurvatureVector& kv, int k) {
  check_k_range(kv, k);
  if (k == 0) return 1.0;
  return elementary_all(kv.kappa, k)[static_cast<std::size_t>(k)];
}

double sigma_k_excluding(const CurvatureVector& kv, int k, int i) {
  check_k_range(kv, k);
  if (i < 0 || i >= kv.n()) throw std::domain_error("sigma_k_excluding: bad index");
  if (k == 0) return 1.0;
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  int seen = 0;
  for (int j = 0; j < kv.n(); ++j) {
    if (j == i) continue;
    ++seen;
    for (int m = std::min(k, seen); m >= 1; --m) e[m] += kv.kappa[j] * e[m - 1];
  }
  return e[static_cast<std::size_t>(k)];
}

double normalized_hk(const CurvatureVector& kv, int k) {
  check_k_range(kv, k);
  return sigma_k(kv, k) / binomial(kv.n(), k);
}

ConeClass cone_class(const CurvatureVector& kv) {
  kv.validate();
  const auto e = elementary_all(kv.kappa, kv.n());
  ConeClass c;
  for (int j = 1; j <= kv.n(); ++j) {
    if (e[static_cast<std::size_t>(j)] > 0.0)
      c.max_k = j;
    else
      break;
  }
  return c;
}

SymmDerivatives f_and_derivatives(const CurvatureVector& kv, int k) {
  check_k_range(kv, k);
  if (k < 1) throw std::domain_error("f_and_derivatives: k must be >= 1");
  const ConeClass cone = cone_class(kv);
  if (cone.max_k < k)
    throw ConeError("f_and_derivatives: curvature vector outside Gamma_k", cone);

  const int n = kv.n();
  const double sk = sigma_k(kv, k);
  const double hk = sk / binomial(n, k);
  SymmDerivatives d;
  d.F_value = kth_root(hk, k);
  d.F_diag.resize(static_cast<std::size_t>(n));
  // dF/dkappa_i = (1/k) H_k^{1/k-1} sigma_{k-1}(kappa|i)/C(n,k)
  //            = F sigma_{k-1}(kappa|i) / (k sigma_k)
  const double scale = d.F_value / (static_cast<double>(k) * sk);
  for (int i = 0; i < n; ++i)
    d.F_diag[static_cast<std::size_t>(i)] = scale * sigma_k_excluding(kv, k - 1, i);
  return d;
}

namespace {

double rel_residual(double lhs, double rhs, double term_scale) {
  const double s = std::max({1.0, std::abs(lhs), std::abs(rhs), term_scale});
  return std::abs(lhs - rhs) / s;
}

} // namespace

LemmaReport lemma_checks(const CurvatureVector& kv, int k) {
  check_k_range(kv, k);
  if (k < 1) throw std::domain_error("lemma_checks: k must be >= 1");
  kv.validate();

  const int n = kv.n();
  LemmaReport rep;
  rep.k = k;
  rep.cone = cone_class(kv);
  rep.in_gamma_k = rep.cone.max_k >= k;
  rep.in_gamma_n = rep.cone.max_k == n;

  const double sk = sigma_k(kv, k);
  const double s1 = sigma_k(kv, 1);
  const double skp1 = (k + 1 <= n) ? sigma_k(kv, k + 1) : 0.0;

  double worst_split = 0.0;
  double sum_count = 0.0, sum_euler = 0.0, sum_square = 0.0;
  double mag_count = 0.0, mag_euler = 0.0, mag_square = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ki = kv.kappa[static_cast<std::size_t>(i)];
    const double sk_i = sigma_k_excluding(kv, k, i);
    const double skm1_i = sigma_k_excluding(kv, k - 1, i);
    worst_split = std::max(
        worst_split,
        rel_residual(sk, sk_i + ki * skm1_i, std::abs(sk_i) + std::abs(ki * skm1_i)));
    sum_count += sk_i;
    mag_count += std::abs(sk_i);
    sum_euler += ki * skm1_i;
    mag_euler += std::abs(ki * skm1_i);
    sum_square += ki * ki * skm1_i;
    mag_square += std::abs(ki * ki * skm1_i);
  }
  rep.identity_split = worst_split;
  rep.identity_count = rel_residual(sum_count, (n - k) * sk, mag_count);
  rep.identity_euler = rel_residual(sum_euler, k * sk, mag_euler);
  rep.identity_square =
      rel_residual(sum_square, s1 * sk - (k + 1) * skp1,
                   mag_square + std::abs(s1 * sk) + std::abs((k + 1) * skp1));

  if (rep.in_gamma_k) {
    double prev = 0.0;
    for (int j = 1; j <= k; ++j) {
      const double root = kth_root(normalized_hk(kv, j), j);
      if (j >= 2) rep.nm_chain_gaps.push_back(prev - root);
      prev = root;
    }
  }

  if (rep.in_gamma_n) {
    const auto d = f_and_derivatives(kv, k);
    double quad = 0.0;
    for (int i = 0; i < n; ++i)
      quad += d.F_diag[static_cast<std::size_t>(i)] * kv.kappa[static_cast<std::size_t>(i)] *
              kv.kappa[static_cast<std::size_t>(i)];
    rep.speed_bound_gap = quad - d.F_value * d.F_value;

    const double k1 = kv.kappa[0];
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double ki = kv.kappa[static_cast<std::size_t>(i)];
      const double g = (k1 - ki) * (d.F_diag[static_cast<std::size_t>(i)] / (k1 * k1) -
                                    d.F_diag[0] / (ki * ki));
      worst = std::max(worst, g);
    }
    rep.pinch_bound_max = worst;
  }

  return rep;
}

} // namespace capflow::symm
