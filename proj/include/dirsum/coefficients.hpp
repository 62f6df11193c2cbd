#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace dirsum {

using Complex = std::complex<double>;

/// Finite Taylor coefficient sequence a_start z^start + ... + a_deg z^deg.
///
/// Always kept in normal form: the first and last stored coefficients are
/// nonzero (exact comparison), and the zero polynomial is empty with
/// start 0. Coefficients outside [start, degree] read as zero.
class TaylorPoly {
 public:
  TaylorPoly() = default;

  /// Throws InvalidArgument on a negative start or any non-finite coefficient.
  TaylorPoly(int start, std::vector<Complex> coeffs);

  static TaylorPoly monomial(int k, Complex c = 1.0);
  /// Dense coefficients a_0, a_1, ...
  static TaylorPoly from_dense(std::vector<Complex> coeffs) {
    return TaylorPoly(0, std::move(coeffs));
  }

  [[nodiscard]] int start() const noexcept { return start_; }
  [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept {
    return is_zero() ? -1 : start_ + static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] Complex coeff(int k) const noexcept;
  /// Coefficients a_0 .. a_degree, zero-filled below start.
  [[nodiscard]] std::vector<Complex> dense() const;

  TaylorPoly& operator+=(const TaylorPoly& other);
  TaylorPoly& operator-=(const TaylorPoly& other);
  TaylorPoly& operator*=(Complex scale);

  friend TaylorPoly operator+(TaylorPoly a, const TaylorPoly& b) { return a += b; }
  friend TaylorPoly operator-(TaylorPoly a, const TaylorPoly& b) { return a -= b; }
  friend TaylorPoly operator*(TaylorPoly a, Complex s) { return a *= s; }
  friend TaylorPoly operator*(Complex s, TaylorPoly a) { return a *= s; }
  friend TaylorPoly operator*(const TaylorPoly& a, const TaylorPoly& b);
  friend bool operator==(const TaylorPoly&, const TaylorPoly&) = default;

 private:
  void normalize();

  int start_ = 0;
  std::vector<Complex> coeffs_;
};

/// Point on the unit circle stored by its angle.
class UnitPoint {
 public:
  UnitPoint() = default;
  explicit UnitPoint(double theta);

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] Complex value() const noexcept { return value_; }
  /// lambda^{-1}; equal to the conjugate on the circle.
  [[nodiscard]] Complex inverse() const noexcept { return std::conj(value_); }
  /// lambda^k computed from k*theta, not by repeated multiplication.
  [[nodiscard]] Complex power(int k) const;

 private:
  double theta_ = 0.0;
  Complex value_{1.0, 0.0};
};

/// Minimal angular separation admitted between two atoms, in radians.
inline constexpr double kPointSeparation = 1e-9;

/// Distance between two angles measured around the circle, in [0, pi].
double angular_distance(double a, double b);

/// Throws DuplicatePoints if two points are within kPointSeparation.
void require_distinct(std::span<const UnitPoint> points);

struct Atom {
  UnitPoint point;
  double mass = 1.0;
};

/// Either normalized arc length on the circle or a finite positive
/// combination of Dirac masses at distinct points.
class Measure {
 public:
  static Measure uniform() { return Measure{}; }
  /// Throws InvalidArgument for an empty list or nonpositive mass,
  /// DuplicatePoints for coinciding atoms.
  static Measure point_masses(std::vector<Atom> atoms);
  static Measure dirac(UnitPoint point, double mass = 1.0) {
    return point_masses({Atom{point, mass}});
  }

  [[nodiscard]] bool is_uniform() const noexcept { return atoms_.empty(); }
  [[nodiscard]] std::span<const Atom> atoms() const noexcept { return atoms_; }
  [[nodiscard]] std::vector<UnitPoint> points() const;

 private:
  Measure() = default;
  std::vector<Atom> atoms_;
};

/// Binomial coefficient C(k, m) by a running product; 0 when k < m.
/// Throws RangeError when the value exceeds 1e300.
double binom(int k, int m);

/// D_{sigma,m}(f) = sum_{k>=m} C(k,m) |a_k|^2.
double sigma_norm(const TaylorPoly& f, int m);

/// S_{m,n} f = sum_{k=m}^{n+m} a_k z^k.
TaylorPoly partial_sum(const TaylorPoly& f, int m, int n);

/// Horner evaluation.
Complex evaluate(const TaylorPoly& f, Complex z);

/// f(lambda) = sum a_k lambda^k for a point on the circle.
Complex boundary_value(const TaylorPoly& f, const UnitPoint& lambda);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(Complex x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }
  [[nodiscard]] Complex value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace dirsum
