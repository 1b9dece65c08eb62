#pragma once

#include <cstddef>
#include <vector>

namespace capflow {

enum class GridMode { axisymmetric, full2d };

/// Uniform discretization of the upper half-sphere in polar coordinates.
/// Node rows run beta_0 = 0 (pole) .. beta_{m_beta+1} = pi/2 (wall), spacing
/// h = (pi/2)/(m_beta+1). full2d adds a periodic azimuth with m_xi columns
/// and requires hypersurface dimension n = 2.
struct HalfSphereGrid {
  int n = 2;
  GridMode mode = GridMode::axisymmetric;
  int m_beta = 0;     // interior beta nodes
  int m_xi = 1;       // azimuth nodes (full2d only)
  double theta = 0.0; // contact angle, in (0, pi/2]

  static HalfSphereGrid axisym(int n, int m_beta, double theta);
  static HalfSphereGrid full(int m_beta, int m_xi, double theta);

  int rows() const { return m_beta + 2; }
  int cols() const { return mode == GridMode::axisymmetric ? 1 : m_xi; }
  std::size_t node_count() const {
    return static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols());
  }
  std::size_t index(int j, int a) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(cols()) +
           static_cast<std::size_t>(a);
  }

  double h_beta() const;
  double h_alpha() const;
  double beta(int j) const { return h_beta() * j; }
  double alpha(int a) const { return h_alpha() * a; }

  /// Throws ConfigError on inconsistent parameters.
  void validate() const;
};

/// One time slice of the radial unknown phi = log(rho) on the grid,
/// row-major (beta row, azimuth column).
struct RadialField {
  std::vector<double> phi;
  double time = 0.0;

  static RadialField zeros(const HalfSphereGrid& g);
};

} // namespace capflow
