#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dirsum/coefficients.hpp"
#include "dirsum/summation.hpp"

namespace dirsum {

/// Largest number of atoms accepted by the Vandermonde correction.
inline constexpr std::size_t kMaxCorrectionPoints = 16;

/// A B = C with A[j][i] = lambda_j^i and C_j the tail sum of f at lambda_j
/// from the first corrected index. Stored row-major.
struct VandermondeSystem {
  std::vector<UnitPoint> points;
  std::vector<Complex> matrix;
  std::vector<Complex> rhs;
  std::vector<Complex> solution;
  Complex determinant;
  /// prod_{i<j} |lambda_j - lambda_i|
  double determinant_modulus = 0.0;
  double residual = 0.0;
};

/// Partial sum whose top s coefficients were replaced so that the polynomial
/// matches f at each atom. Coefficients m .. base_degree are those of f.
struct CorrectedPolynomial {
  TaylorPoly poly;
  int base_degree = 0;
  std::vector<UnitPoint> points;
};

/// sum_{k >= j0} a_k lambda^{k - j0}. For j0 >= max(1, f.start) this equals
/// the quotient coefficient b_{j0-1} of Q_lambda f.
Complex tail_sum(const TaylorPoly& f, const UnitPoint& lambda, int j0);

/// q_n = sum_{k=m}^{n+m-1} a_k z^k + tail_sum(f, lambda, n+m) z^{n+m}.
/// Requires f.start >= m (InvalidSupport otherwise).
CorrectedPolynomial single_point_correction(const TaylorPoly& f, const UnitPoint& lambda, int m, int n);

/// Solves for the top s coefficients by Gaussian elimination with partial
/// pivoting. Requires 1 <= s <= 16, n >= s, f.start >= m.
/// Throws DuplicatePoints, SingularSystem (pivot below 1e-13),
/// InvalidSupport, InvalidArgument.
std::pair<CorrectedPolynomial, VandermondeSystem> vandermonde_correct(const TaylorPoly& f,
                                                                      std::span<const UnitPoint> points,
                                                                      int m, int n);

/// Same polynomial built from the two-point partial-fraction identity
///   h = a (z - l_1) P^{L2}_{n-1} f + b (z - l_2) P^{L1}_{n-1} f,
/// a = 1/(l_2 - l_1), b = -a, where L1 drops l_2 and L2 drops l_1. Recurses down
/// to single_point_correction. Requires s >= 2.
TaylorPoly recursion_build(const TaylorPoly& f, std::span<const UnitPoint> points, int m, int n);

/// ||P^Lambda_{m,n} f - f||^2_{mu,m} for n in [n_lo, n_hi], Lambda the atoms of
/// mu. bound_ratio divides by D_{mu,m+1}(f). Requires n_lo >= s.
std::vector<ConvergenceRecord> converge_dirac(const TaylorPoly& f, const Measure& mu, int m, int n_lo,
                                              int n_hi);

}  // namespace dirsum
