#include "dirsum/summation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dirsum/douglas.hpp"
#include "dirsum/errors.hpp"
#include "dirsum/parallel.hpp"

namespace dirsum {

namespace {

bool agrees(double closed, double direct) {
  const double diff = std::abs(closed - direct);
  return diff <= 1e-12 || diff <= 1e-10 * std::abs(closed);
}

}  // namespace

TaylorPoly counterexample_fn(int m, int n) {
  if (m < 1 || n < 0) throw InvalidArgument("counterexample_fn: need m >= 1, n >= 0");
  return TaylorPoly::monomial(n + m + 1, static_cast<double>(n)) +
         TaylorPoly::monomial(n + m, -static_cast<double>(n + 1)) + TaylorPoly::monomial(m);
}

CounterexampleReport counterexample_report(int m, int n) {
  const TaylorPoly f = counterexample_fn(m, n);
  const UnitPoint one(0.0);
  CounterexampleReport r;
  r.m = m;
  r.n = n;
  const double nn = n;
  r.closed_S = (nn + 1) * (nn + 1) * binom(m + n, m) - 2 * nn - 1;
  r.closed_f = nn * nn * binom(m + n, m - 1) + binom(m + n, m) - 1;
  r.direct_S = local_norm(partial_sum(f, m, n), one, m);
  r.direct_f = local_norm(f, one, m);
  r.ratio = r.closed_f == 0.0 ? 0.0 : std::sqrt(r.closed_S / r.closed_f);
  if (!agrees(r.closed_S, r.direct_S) || !agrees(r.closed_f, r.direct_f)) {
    throw InvariantViolation("counterexample m=" + std::to_string(m) + " n=" + std::to_string(n) +
                             ": closed forms disagree with direct norms");
  }
  return r;
}

ComparisonResult comparison_check(const TaylorPoly& q, const UnitPoint& lambda, int m, int n) {
  if (m < 1 || n < 0) throw InvalidArgument("comparison_check: need m >= 1, n >= 0");
  if (!q.is_zero() && (q.start() < m + 1 || q.degree() > n + m + 1)) {
    throw InvalidSupport("comparison_check: q must be supported on [" + std::to_string(m + 1) + ", " +
                         std::to_string(n + m + 1) + "]");
  }
  ComparisonResult r;
  r.lhs = local_norm(q, lambda, m);
  r.rhs = (n + 1) * binom(n + m + 1, m) * sigma_norm(q, m);
  r.ok = r.lhs <= r.rhs * (1.0 + 1e-10);
  return r;
}

double bound_ratio(double norm_sq, double denominator) {
  if (denominator == 0.0) {
    return norm_sq == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return norm_sq / denominator;
}

bool truncation_headroom_ok(const TaylorPoly& f, int m, int n_hi) {
  return n_hi + m + 1 <= f.degree();
}

std::vector<ConvergenceRecord> converge_weighted(const TaylorPoly& f, const Measure& mu, int m,
                                                 const WeightArray& array, int n_lo, int n_hi) {
  if (array.variant() != WeightVariant::Shifted) {
    throw VariantMismatch("converge_weighted needs a shifted weight array");
  }
  if (m < 1 || n_lo < 0 || n_hi < n_lo) {
    throw InvalidArgument("converge_weighted: need m >= 1 and 0 <= n_lo <= n_hi");
  }
  if (!f.is_zero() && f.start() < m + 1) {
    throw InvalidSupport("converge_weighted: f must start at degree >= m+1 = " + std::to_string(m + 1));
  }
  const double denominator = mu_norm_sq(f, mu, m + 1);
  std::vector<ConvergenceRecord> out(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(out.size(), [&](std::size_t i) {
    const int n = n_lo + static_cast<int>(i);
    const double norm_sq = mu_norm_sq(f - modified_taylor(array, f, m, n), mu, m);
    out[i] = {n, norm_sq, bound_ratio(norm_sq, denominator)};
  });
  return out;
}

}  // namespace dirsum
