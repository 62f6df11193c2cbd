#include "dirsum/douglas.hpp"

#include <algorithm>
#include <cmath>

#include "dirsum/errors.hpp"

namespace dirsum {

LocalDecomposition difference_quotient(const TaylorPoly& f, const UnitPoint& lambda) {
  const Complex l = lambda.value();
  const int deg = f.degree();
  if (deg <= 0) return {f.coeff(0), TaylorPoly{}, lambda};

  std::vector<Complex> d(static_cast<std::size_t>(deg));
  d[static_cast<std::size_t>(deg - 1)] = f.coeff(deg);
  for (int k = deg - 1; k >= 1; --k) {
    d[static_cast<std::size_t>(k - 1)] = f.coeff(k) + l * d[static_cast<std::size_t>(k)];
  }
  const Complex alpha = f.coeff(0) + l * d[0];
  return {alpha, TaylorPoly::from_dense(std::move(d)), lambda};
}

double local_norm(const TaylorPoly& f, const UnitPoint& lambda, int m) {
  if (m < 1) throw InvalidArgument("local_norm: order must be >= 1");
  return sigma_norm(difference_quotient(f, lambda).quotient, m - 1);
}

double mu_norm_sq(const TaylorPoly& f, const Measure& mu, int m) {
  if (m < 1) throw InvalidArgument("mu_norm_sq: order must be >= 1");
  if (mu.is_uniform()) return sigma_norm(f, m);
  CompensatedSum acc;
  for (const auto& atom : mu.atoms()) acc.add(atom.mass * local_norm(f, atom.point, m));
  return acc.value();
}

TaylorPoly node_polynomial(std::span<const UnitPoint> points) {
  TaylorPoly out = TaylorPoly::monomial(0);
  for (const auto& p : points) out = out * TaylorPoly::from_dense({-p.value(), 1.0});
  return out;
}

MultiPointDecomposition multi_decompose(const TaylorPoly& f, std::span<const UnitPoint> points) {
  require_distinct(points);
  // f = r_1 + (z-l_1)(r_2 + (z-l_2)(... (r_s + (z-l_s) core)))
  TaylorPoly core = f;
  std::vector<Complex> remainders;
  remainders.reserve(points.size());
  for (const auto& p : points) {
    auto dec = difference_quotient(core, p);
    remainders.push_back(dec.alpha);
    core = std::move(dec.quotient);
  }
  TaylorPoly residual;
  for (std::size_t j = points.size(); j-- > 0;) {
    residual = TaylorPoly::monomial(0, remainders[j]) +
               TaylorPoly::from_dense({-points[j].value(), 1.0}) * residual;
  }
  return {std::move(residual), std::move(core), {points.begin(), points.end()}};
}

}  // namespace dirsum
