#include "dirsum/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirsum/douglas.hpp"
#include "dirsum/errors.hpp"
#include "dirsum/parallel.hpp"

namespace dirsum {

namespace {

constexpr double kPivotFloor = 1e-13;

void require_order_support(const TaylorPoly& f, int m, const char* who) {
  if (m < 1) throw InvalidArgument(std::string(who) + ": order must be >= 1");
  if (!f.is_zero() && f.start() < m) {
    throw InvalidSupport(std::string(who) + ": f must start at degree >= m = " + std::to_string(m));
  }
}

void check_interpolation(const TaylorPoly& f, const CorrectedPolynomial& p) {
  for (const auto& lambda : p.points) {
    const Complex want = boundary_value(f, lambda);
    const Complex got = boundary_value(p.poly, lambda);
    if (std::abs(got - want) > 1e-9 * (1.0 + std::abs(want))) {
      throw InvariantViolation("corrected polynomial misses f at angle " +
                               std::to_string(lambda.theta()));
    }
  }
}

struct Solved {
  std::vector<Complex> x;
  Complex det;
};

// Dense LU with partial pivoting on a copy of a (row-major, s x s).
Solved solve(std::vector<Complex> a, std::vector<Complex> b, std::size_t s) {
  Complex det{1.0, 0.0};
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < s; ++r) {
      if (std::abs(a[r * s + col]) > std::abs(a[pivot * s + col])) pivot = r;
    }
    if (std::abs(a[pivot * s + col]) < kPivotFloor) {
      throw SingularSystem("Vandermonde pivot " + std::to_string(std::abs(a[pivot * s + col])) +
                           " below 1e-13 in column " + std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < s; ++c) std::swap(a[pivot * s + c], a[col * s + c]);
      std::swap(b[pivot], b[col]);
      det = -det;
    }
    det *= a[col * s + col];
    for (std::size_t r = col + 1; r < s; ++r) {
      const Complex factor = a[r * s + col] / a[col * s + col];
      if (factor == Complex{}) continue;
      for (std::size_t c = col; c < s; ++c) a[r * s + c] -= factor * a[col * s + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Complex> x(s);
  for (std::size_t i = s; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t c = i + 1; c < s; ++c) acc -= a[i * s + c] * x[c];
    x[i] = acc / a[i * s + i];
  }
  return {std::move(x), det};
}

TaylorPoly recurse(const TaylorPoly& f, const std::vector<UnitPoint>& points, int m, int n) {
  if (points.size() == 1) return single_point_correction(f, points[0], m, n).poly;
  const UnitPoint l1 = points[0];
  const UnitPoint l2 = points[1];
  std::vector<UnitPoint> drop2{l1};  // Lambda_1
  std::vector<UnitPoint> drop1{l2};  // Lambda_2
  drop2.insert(drop2.end(), points.begin() + 2, points.end());
  drop1.insert(drop1.end(), points.begin() + 2, points.end());
  const Complex a = 1.0 / (l2.value() - l1.value());
  const Complex b = -a;
  const TaylorPoly lin1 = TaylorPoly::from_dense({-l1.value(), 1.0});
  const TaylorPoly lin2 = TaylorPoly::from_dense({-l2.value(), 1.0});
  return a * (lin1 * recurse(f, drop1, m, n - 1)) + b * (lin2 * recurse(f, drop2, m, n - 1));
}

}  // namespace

Complex tail_sum(const TaylorPoly& f, const UnitPoint& lambda, int j0) {
  if (j0 < 0) throw InvalidArgument("tail_sum: negative start index");
  ComplexCompensatedSum acc;
  for (int k = std::max(j0, f.start()); k <= f.degree(); ++k) {
    acc.add(f.coeff(k) * lambda.power(k - j0));
  }
  return acc.value();
}

CorrectedPolynomial single_point_correction(const TaylorPoly& f, const UnitPoint& lambda, int m, int n) {
  require_order_support(f, m, "single_point_correction");
  if (n < 0) throw InvalidArgument("single_point_correction: n must be >= 0");
  CorrectedPolynomial out;
  out.poly = (n > 0 ? partial_sum(f, m, n - 1) : TaylorPoly{}) +
             TaylorPoly::monomial(n + m, tail_sum(f, lambda, n + m));
  out.base_degree = n + m - 1;
  out.points = {lambda};
  check_interpolation(f, out);
  return out;
}

std::pair<CorrectedPolynomial, VandermondeSystem> vandermonde_correct(const TaylorPoly& f,
                                                                      std::span<const UnitPoint> points,
                                                                      int m, int n) {
  const std::size_t s = points.size();
  if (s == 0 || s > kMaxCorrectionPoints) {
    throw InvalidArgument("vandermonde_correct: need 1 to 16 points, got " + std::to_string(s));
  }
  require_distinct(points);
  require_order_support(f, m, "vandermonde_correct");
  if (n < static_cast<int>(s)) {
    throw InvalidArgument("vandermonde_correct: need n >= s (n=" + std::to_string(n) +
                          ", s=" + std::to_string(s) + ")");
  }

  const int first = n + m - static_cast<int>(s) + 1;
  VandermondeSystem sys;
  sys.points.assign(points.begin(), points.end());
  sys.matrix.resize(s * s);
  sys.rhs.resize(s);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < s; ++i) sys.matrix[j * s + i] = points[j].power(static_cast<int>(i));
    sys.rhs[j] = tail_sum(f, points[j], first);
  }
  auto solved = solve(sys.matrix, sys.rhs, s);
  sys.solution = std::move(solved.x);
  sys.determinant = solved.det;

  sys.determinant_modulus = 1.0;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      sys.determinant_modulus *= std::abs(points[j].value() - points[i].value());
    }
  }
  if (std::abs(std::abs(sys.determinant) - sys.determinant_modulus) > 1e-8 * sys.determinant_modulus) {
    throw InvariantViolation("Vandermonde determinant disagrees with the product formula");
  }

  double rhs_max = 0.0;
  for (std::size_t j = 0; j < s; ++j) {
    Complex r = -sys.rhs[j];
    for (std::size_t i = 0; i < s; ++i) r += sys.matrix[j * s + i] * sys.solution[i];
    sys.residual = std::max(sys.residual, std::abs(r));
    rhs_max = std::max(rhs_max, std::abs(sys.rhs[j]));
  }
  if (sys.residual > 1e-10 * (1.0 + rhs_max)) {
    throw InvariantViolation("Vandermonde residual " + std::to_string(sys.residual) + " too large");
  }

  CorrectedPolynomial out;
  out.poly = partial_sum(f, m, n - static_cast<int>(s)) + TaylorPoly(first, sys.solution);
  out.base_degree = first - 1;
  out.points = sys.points;
  check_interpolation(f, out);
  return {std::move(out), std::move(sys)};
}

TaylorPoly recursion_build(const TaylorPoly& f, std::span<const UnitPoint> points, int m, int n) {
  if (points.size() < 2) throw InvalidArgument("recursion_build: need at least two points");
  if (points.size() > kMaxCorrectionPoints) throw InvalidArgument("recursion_build: at most 16 points");
  require_distinct(points);
  require_order_support(f, m, "recursion_build");
  if (n < static_cast<int>(points.size())) throw InvalidArgument("recursion_build: need n >= s");
  return recurse(f, {points.begin(), points.end()}, m, n);
}

std::vector<ConvergenceRecord> converge_dirac(const TaylorPoly& f, const Measure& mu, int m, int n_lo,
                                              int n_hi) {
  if (mu.is_uniform()) throw InvalidArgument("converge_dirac needs a point-mass measure");
  const auto points = mu.points();
  if (n_lo < static_cast<int>(points.size()) || n_hi < n_lo) {
    throw InvalidArgument("converge_dirac: need s <= n_lo <= n_hi (s=" + std::to_string(points.size()) + ")");
  }
  require_order_support(f, m, "converge_dirac");
  const double denominator = mu_norm_sq(f, mu, m + 1);
  std::vector<ConvergenceRecord> out(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(out.size(), [&](std::size_t i) {
    const int n = n_lo + static_cast<int>(i);
    const auto corrected = vandermonde_correct(f, points, m, n).first;
    const double norm_sq = mu_norm_sq(corrected.poly - f, mu, m);
    out[i] = {n, norm_sq, bound_ratio(norm_sq, denominator)};
  });
  return out;
}

}  // namespace dirsum
