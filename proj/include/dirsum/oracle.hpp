#pragma once

#include <vector>

#include "dirsum/coefficients.hpp"

namespace dirsum {

/// Tensor grid on the disk: Gauss-Legendre in t = r^2 on [0, 1] times an
/// angular rule. Without refinement the angular rule is the uniform
/// trapezoid rule with angular_nodes points. With refinement on, and a
/// point-mass measure, each ring uses composite 8-point Gauss-Legendre panels:
/// angular_nodes / 8 uniform panels, split further at breakpoints that grade
/// geometrically (ratio 2) toward each atom down to the ring's distance
/// 1 - r from the circle.
struct QuadratureGrid {
  int radial_nodes = 128;
  int angular_nodes = 512;
  bool singular_refinement = true;

  /// Both node counts doubled.
  [[nodiscard]] QuadratureGrid refined() const {
    return {2 * radial_nodes, 2 * angular_nodes, singular_refinement};
  }
};

struct QuadratureResult {
  double value = 0.0;
  /// |value on this grid - value on the refined grid|.
  double error_estimate = 0.0;
  double refined_value = 0.0;
};

/// Gauss-Legendre nodes and weights on [a, b], ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int count, double a, double b);

/// P_mu(z); 1 for the uniform measure. Throws OutsideDisk when
/// |z| >= 1 - 1e-12.
double poisson_kernel(Complex z, const Measure& mu);

/// f^{(m)}.
TaylorPoly derivative(const TaylorPoly& f, int m);

/// D_{mu,m}(f) from the area integral
///   1/(m!(m-1)!) int_D |f^{(m)}|^2 P_mu (1 - |z|^2)^{m-1} dA
/// with dA normalized to total mass 1. Throws InvalidArgument for a grid
/// below 16 radial / 64 angular nodes.
double quadrature_value(const TaylorPoly& f, const Measure& mu, int m, const QuadratureGrid& grid);

/// quadrature_value on grid and on grid.refined(). Throws NonConvergent when
/// the two differ by more than 1e-3 relative.
QuadratureResult quadrature_norm_estimate(const TaylorPoly& f, const Measure& mu, int m,
                                          const QuadratureGrid& grid = {});

/// The value of quadrature_norm_estimate.
double quadrature_norm(const TaylorPoly& f, const Measure& mu, int m, const QuadratureGrid& grid = {});

}  // namespace dirsum
