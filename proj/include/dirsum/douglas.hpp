#pragma once

#include <span>
#include <vector>

#include "dirsum/coefficients.hpp"

namespace dirsum {

/// f = alpha + (z - lambda) * quotient, with alpha = f(lambda).
struct LocalDecomposition {
  Complex alpha;
  TaylorPoly quotient;
  UnitPoint point;
};

/// f = residual + (z - l_1)...(z - l_s) * core with deg(residual) <= s - 1.
struct MultiPointDecomposition {
  TaylorPoly residual;
  TaylorPoly core;
  std::vector<UnitPoint> points;
};

/// Difference quotient Q_lambda f = (f - f(lambda)) / (z - lambda) by synthetic
/// division from the top coefficient down. The quotient coefficients b_k obey
/// b_{k-1} - lambda b_k = a_k for k >= 1 and alpha - lambda b_0 = a_0.
LocalDecomposition difference_quotient(const TaylorPoly& f, const UnitPoint& lambda);

/// D_{lambda,m}(f) = D_{sigma,m-1}(Q_lambda f).
double local_norm(const TaylorPoly& f, const UnitPoint& lambda, int m);

/// Sum_j c_j D_{lambda_j,m}(f) for point masses; D_{sigma,m}(f) for the
/// uniform measure.
double mu_norm_sq(const TaylorPoly& f, const Measure& mu, int m);

/// Iterated difference quotients in the given order. The residual is
/// assembled in Newton form from the successive remainders, so its degree is
/// at most s - 1 by construction. Throws DuplicatePoints.
MultiPointDecomposition multi_decompose(const TaylorPoly& f, std::span<const UnitPoint> points);

/// (z - l_1)...(z - l_s).
TaylorPoly node_polynomial(std::span<const UnitPoint> points);

}  // namespace dirsum
