#include "dirsum/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dirsum/errors.hpp"

namespace dirsum {

TaylorPoly::TaylorPoly(int start, std::vector<Complex> coeffs)
    : start_(start), coeffs_(std::move(coeffs)) {
  if (start < 0) {
    throw InvalidArgument("TaylorPoly: negative start index " + std::to_string(start));
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidArgument("TaylorPoly: non-finite coefficient");
    }
  }
  normalize();
}

TaylorPoly TaylorPoly::monomial(int k, Complex c) { return TaylorPoly(k, {c}); }

void TaylorPoly::normalize() {
  const Complex zero{0.0, 0.0};
  while (!coeffs_.empty() && coeffs_.back() == zero) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [&](const Complex& c) { return c != zero; });
  start_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) start_ = 0;
}

Complex TaylorPoly::coeff(int k) const noexcept {
  if (k < start_ || k > degree()) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k - start_)];
}

std::vector<Complex> TaylorPoly::dense() const {
  std::vector<Complex> out(static_cast<std::size_t>(degree() + 1));
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + start_);
  return out;
}

TaylorPoly& TaylorPoly::operator+=(const TaylorPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(start_, other.start_);
  const int hi = std::max(degree(), other.degree());
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int k = lo; k <= hi; ++k) {
    out[static_cast<std::size_t>(k - lo)] = coeff(k) + other.coeff(k);
  }
  start_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

TaylorPoly& TaylorPoly::operator-=(const TaylorPoly& other) {
  return *this += other * Complex{-1.0, 0.0};
}

TaylorPoly& TaylorPoly::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  normalize();
  return *this;
}

TaylorPoly operator*(const TaylorPoly& a, const TaylorPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TaylorPoly(a.start_ + b.start_, std::move(out));
}

UnitPoint::UnitPoint(double theta) : theta_(theta), value_(std::polar(1.0, theta)) {
  if (!std::isfinite(theta)) throw InvalidArgument("UnitPoint: non-finite angle");
}

Complex UnitPoint::power(int k) const { return std::polar(1.0, theta_ * k); }

double angular_distance(double a, double b) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

void require_distinct(std::span<const UnitPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (angular_distance(points[i].theta(), points[j].theta()) <= kPointSeparation) {
        throw DuplicatePoints("points " + std::to_string(i) + " and " + std::to_string(j) +
                              " coincide (angles " + std::to_string(points[i].theta()) +
                              ", " + std::to_string(points[j].theta()) + ")");
      }
    }
  }
}

Measure Measure::point_masses(std::vector<Atom> atoms) {
  if (atoms.empty()) throw InvalidArgument("point-mass measure needs at least one atom");
  for (const auto& a : atoms) {
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) {
      throw InvalidArgument("atom mass must be positive and finite, got " +
                            std::to_string(a.mass));
    }
  }
  Measure mu;
  mu.atoms_ = std::move(atoms);
  require_distinct(mu.points());
  return mu;
}

std::vector<UnitPoint> Measure::points() const {
  std::vector<UnitPoint> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.point);
  return out;
}

double binom(int k, int m) {
  if (k < 0 || m < 0) throw InvalidArgument("binom: negative argument");
  if (k < m) return 0.0;
  const int j = std::min(m, k - m);
  double r = 1.0;
  // r stays an integer; each product is exact while below 2^53.
  for (int i = 1; i <= j; ++i) {
    r *= static_cast<double>(k - j + i);
    r /= static_cast<double>(i);
    if (r > 1e300) {
      throw RangeError("binom(" + std::to_string(k) + ", " + std::to_string(m) +
                       ") exceeds 1e300");
    }
  }
  return r;
}

double sigma_norm(const TaylorPoly& f, int m) {
  if (m < 0) throw InvalidArgument("sigma_norm: negative order");
  CompensatedSum acc;
  for (int k = std::max(m, f.start()); k <= f.degree(); ++k) {
    acc.add(binom(k, m) * std::norm(f.coeff(k)));
  }
  return acc.value();
}

TaylorPoly partial_sum(const TaylorPoly& f, int m, int n) {
  if (m < 0 || n < 0) throw InvalidArgument("partial_sum: negative index");
  const int lo = std::max(m, f.start());
  const int hi = std::min(n + m, f.degree());
  if (lo > hi) return {};
  return TaylorPoly(lo, {f.coeffs().begin() + (lo - f.start()),
                         f.coeffs().begin() + (hi - f.start() + 1)});
}

Complex evaluate(const TaylorPoly& f, Complex z) {
  Complex acc{0.0, 0.0};
  for (int k = f.degree(); k >= 0; --k) acc = acc * z + f.coeff(k);
  return acc;
}

Complex boundary_value(const TaylorPoly& f, const UnitPoint& lambda) {
  return evaluate(f, lambda.value());
}

}  // namespace dirsum
