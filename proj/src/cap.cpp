#include "capflow/cap.hpp"

#include <cmath>
#include <numbers>

#include "capflow/errors.hpp"

namespace capflow {

namespace {

double cap_w(double cos_theta, double beta) {
  const double s = std::sin(beta);
  return std::sqrt(1.0 - cos_theta * cos_theta * s * s);
}

// I_m = int_0^theta sin^m(w) dw by the standard reduction
// I_m = (-cos(theta) sin^{m-1}(theta) + (m-1) I_{m-2}) / m.
double sin_power_integral(int m, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  double im2 = theta;        // I_0
  double im1 = 1.0 - c;      // I_1
  if (m == 0) return im2;
  if (m == 1) return im1;
  double im = 0.0;
  for (int j = 2; j <= m; ++j) {
    im = (-c * std::pow(s, j - 1) + (j - 1) * im2) / j;
    im2 = im1;
    im1 = im;
  }
  return im;
}

} // namespace

double cap_rho(const CapSpec& cap, double beta) {
  const double c = std::cos(cap.theta);
  return cap.r * (cap_w(c, beta) - c * std::cos(beta));
}

double cap_phi(const CapSpec& cap, double beta) { return std::log(cap_rho(cap, beta)); }

double cap_dphi(const CapSpec& cap, double beta) {
  const double c = std::cos(cap.theta);
  return c * std::sin(beta) / cap_w(c, beta);
}

double cap_v(const CapSpec& cap, double beta) {
  const double c = std::cos(cap.theta);
  return 1.0 / cap_w(c, beta);
}

RadialField cap_field(const CapSpec& cap, const HalfSphereGrid& grid) {
  if (std::abs(cap.theta - grid.theta) > 1e-12)
    throw ConfigError("cap_field: cap contact angle does not match the grid");
  if (!(cap.r > 0.0)) throw ConfigError("cap_field: radius must be positive");
  RadialField f = RadialField::zeros(grid);
  for (int j = 0; j < grid.rows(); ++j) {
    const double p = cap_phi(cap, grid.beta(j));
    for (int a = 0; a < grid.cols(); ++a) f.phi[grid.index(j, a)] = p;
  }
  return f;
}

double sphere_measure(int m) {
  const double half = 0.5 * static_cast<double>(m + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double ball_volume(int m) {
  const double half = 0.5 * static_cast<double>(m);
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

CapAnalytics cap_analytics(const CapSpec& cap, int n) {
  if (n < 2) throw ConfigError("cap_analytics: n must be >= 2");
  const double c = std::cos(cap.theta);
  const double s = std::sin(cap.theta);
  const double omega = sphere_measure(n - 1);
  const double in1 = sin_power_integral(n - 1, cap.theta);

  CapAnalytics out;
  out.area = std::pow(cap.r, n) * omega * in1;
  out.wetted_area = ball_volume(n) * std::pow(cap.r * s, n);
  out.volume = std::pow(cap.r, n + 1) * omega / (n + 1) *
               (in1 - c * std::pow(s, n) / static_cast<double>(n));
  out.b_theta = (omega * in1 - c * ball_volume(n) * std::pow(s, n)) / (n + 1);
  return out;
}

double cap_b_theta(double theta, int n) { return cap_analytics({theta, 1.0}, n).b_theta; }

double cap_b_theta_by_quadrature(double theta, int n, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double c = std::cos(theta);
  const double h = (std::numbers::pi / 2.0) / intervals;
  // lateral area of the unit cap in the graph parametrization:
  // |Sigma| = omega_{n-1} int rho^n v sin^{n-1}(beta) dbeta with v = 1/W
  auto integrand = [&](double beta) {
    const double w = cap_w(c, beta);
    const double rho = w - c * std::cos(beta);
    return std::pow(rho, n) * std::pow(std::sin(beta), n - 1) / w;
  };
  double acc = integrand(0.0) + integrand(std::numbers::pi / 2.0);
  for (int i = 1; i < intervals; ++i)
    acc += (i % 2 == 1 ? 4.0 : 2.0) * integrand(h * i);
  const double area = sphere_measure(n - 1) * acc * h / 3.0;
  const double wetted = ball_volume(n) * std::pow(std::sin(theta), n);
  return (area - c * wetted) / (n + 1);
}

} // namespace capflow
