#pragma once

#include "capflow/grid.hpp"

namespace capflow {

/// Spherical cap of radius r meeting the wall at contact angle theta; its
/// center sits at depth r*cos(theta) below the wall on the polar axis.
struct CapSpec {
  double theta = 0.0;
  double r = 1.0;
};

/// Radial profile rho(beta) of the cap: the positive root of
/// |rho X - r cos(theta) e| = r, i.e. r (W - cos(theta) cos(beta)) with
/// W = sqrt(1 - cos^2(theta) sin^2(beta)).
double cap_rho(const CapSpec& cap, double beta);

/// phi = log rho on the cap.
double cap_phi(const CapSpec& cap, double beta);

/// d(phi)/d(beta) = cos(theta) sin(beta) / W, exact.
double cap_dphi(const CapSpec& cap, double beta);

/// Gradient factor v = sqrt(1 + phi'^2) = 1/W on the cap, exact.
double cap_v(const CapSpec& cap, double beta);

/// The exact cap sampled onto a grid. Requires cap.theta == grid.theta.
RadialField cap_field(const CapSpec& cap, const HalfSphereGrid& grid);

/// Closed-form measures of a cap in dimension n (hypersurface dimension):
/// lateral area |Sigma|, wetted disk measure, enclosed volume, and the
/// normalization b_theta (the capillary area of the unit cap over n+1).
struct CapAnalytics {
  double area = 0.0;
  double wetted_area = 0.0;
  double volume = 0.0;
  double b_theta = 0.0;
};

CapAnalytics cap_analytics(const CapSpec& cap, int n);

/// b_theta alone, unit cap, closed form (any n via the sin-power recurrence).
double cap_b_theta(double theta, int n);

/// Independent route for b_theta: composite Simpson quadrature of the exact
/// unit-cap profile in the graph parametrization. Used to audit the closed
/// form.
double cap_b_theta_by_quadrature(double theta, int n, int intervals = 1 << 14);

/// |S^{m}|, the measure of the unit m-sphere.
double sphere_measure(int m);

/// Volume of the unit ball in R^m.
double ball_volume(int m);

} // namespace capflow
