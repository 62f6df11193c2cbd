#pragma once

#include <vector>

#include "dirsum/coefficients.hpp"
#include "dirsum/weights.hpp"

namespace dirsum {

/// Norms of the divergence example at lambda = 1, in closed form and by
/// direct quotient-norm computation.
struct CounterexampleReport {
  int m = 0;
  int n = 0;
  double closed_S = 0.0;  // (n+1)^2 C(m+n,m) - 2n - 1
  double closed_f = 0.0;  // n^2 C(m+n,m-1) + C(m+n,m) - 1
  double direct_S = 0.0;
  double direct_f = 0.0;
  double ratio = 0.0;  // sqrt(closed_S / closed_f), 0 when closed_f = 0
};

struct ConvergenceRecord {
  int n = 0;
  double norm_sq = 0.0;
  double bound_ratio = 0.0;
};

struct ComparisonResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

/// f_n = n z^{n+m+1} - (n+1) z^{n+m} + z^m.
TaylorPoly counterexample_fn(int m, int n);

/// Throws InvariantViolation if closed and direct values disagree beyond
/// relative 1e-10 (absolute 1e-12 near zero).
CounterexampleReport counterexample_report(int m, int n);

/// Compares D_{lambda,m}(q) with (n+1) C(n+m+1,m) D_{sigma,m}(q).
/// Throws InvalidSupport unless q lives on [m+1, n+m+1].
ComparisonResult comparison_check(const TaylorPoly& q, const UnitPoint& lambda, int m, int n);

/// norm_sq / D_{mu,m+1}(f); 0 for 0/0 and +inf for x/0 with x > 0.
double bound_ratio(double norm_sq, double denominator);

/// True when the largest window n_hi + m + 1 stays within deg f. Past that
/// point the experiment only measures the truncation, not the method.
bool truncation_headroom_ok(const TaylorPoly& f, int m, int n_hi);

/// D_{mu,m}(f - p_n) for n in [n_lo, n_hi], with p_n the modified Taylor
/// polynomial of a shifted weight array. Rows are evaluated in parallel.
/// Throws VariantMismatch, InvalidSupport (f.start < m+1), InvalidArgument.
std::vector<ConvergenceRecord> converge_weighted(const TaylorPoly& f, const Measure& mu, int m,
                                                 const WeightArray& array, int n_lo, int n_hi);

}  // namespace dirsum
