#include "capflow/grid.hpp"

#include <cmath>
#include <numbers>

#include "capflow/errors.hpp"

namespace capflow {

HalfSphereGrid HalfSphereGrid::axisym(int n, int m_beta, double theta) {
  HalfSphereGrid g;
  g.n = n;
  g.mode = GridMode::axisymmetric;
  g.m_beta = m_beta;
  g.m_xi = 1;
  g.theta = theta;
  g.validate();
  return g;
}

HalfSphereGrid HalfSphereGrid::full(int m_beta, int m_xi, double theta) {
  HalfSphereGrid g;
  g.n = 2;
  g.mode = GridMode::full2d;
  g.m_beta = m_beta;
  g.m_xi = m_xi;
  g.theta = theta;
  g.validate();
  return g;
}

double HalfSphereGrid::h_beta() const {
  return (std::numbers::pi / 2.0) / static_cast<double>(m_beta + 1);
}

double HalfSphereGrid::h_alpha() const {
  return 2.0 * std::numbers::pi / static_cast<double>(m_xi);
}

void HalfSphereGrid::validate() const {
  if (n < 2) throw ConfigError("grid: hypersurface dimension n must be >= 2");
  if (mode == GridMode::full2d && n != 2)
    throw ConfigError("grid: full2d mode requires n = 2");
  if (m_beta < 3) throw ConfigError("grid: need at least 3 interior beta nodes");
  if (mode == GridMode::full2d) {
    if (m_xi < 4 || m_xi % 2 != 0)
      throw ConfigError("grid: full2d needs an even azimuth count >= 4 (pole reflection)");
  }
  if (!(theta > 0.0) || theta > std::numbers::pi / 2.0 + 1e-15)
    throw ConfigError("grid: contact angle must lie in (0, pi/2]");
}

RadialField RadialField::zeros(const HalfSphereGrid& g) {
  RadialField f;
  f.phi.assign(g.node_count(), 0.0);
  return f;
}

} // namespace capflow
