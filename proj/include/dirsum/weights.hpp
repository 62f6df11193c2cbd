#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dirsum/coefficients.hpp"

namespace dirsum {

/// Shifted: row n is supported on k in [m+1, m+n+1], differences bounded by
/// L / sqrt((n+1) C(m+n+1, m)).
/// Base: row n is supported on k in [m, m+n], differences bounded by
/// L / sqrt((n+1) C(m+n, m-1)).
enum class WeightVariant { Shifted, Base };

struct BoxcarRule {};

/// w(n,k) = 1 + eps * (k - k_min) / sqrt((n+1) C(bound_k(n), bound_m)).
struct TaperedRule {
  double eps = 0.5;
};

/// Explicit entries; anything not listed is zero.
struct TableRule {
  std::map<std::pair<int, int>, Complex> entries;
};

using WeightRule = std::variant<BoxcarRule, TaperedRule, TableRule>;

class WeightArray {
 public:
  /// M = 1, L = 0.
  static WeightArray boxcar(WeightVariant variant, int m);
  /// M = 1 + eps, L = eps.
  static WeightArray tapered(WeightVariant variant, int m, double eps);
  static WeightArray table(WeightVariant variant, int m, TableRule table, double claimed_M,
                           double claimed_L);

  [[nodiscard]] WeightVariant variant() const noexcept { return variant_; }
  [[nodiscard]] const WeightRule& rule() const noexcept { return rule_; }
  [[nodiscard]] int order() const noexcept { return m_; }
  [[nodiscard]] double claimed_M() const noexcept { return claimed_M_; }
  [[nodiscard]] double claimed_L() const noexcept { return claimed_L_; }
  [[nodiscard]] std::string describe() const;

  [[nodiscard]] int k_min() const noexcept { return variant_ == WeightVariant::Shifted ? m_ + 1 : m_; }
  [[nodiscard]] int k_max(int n) const noexcept { return k_min() + n; }
  [[nodiscard]] bool in_support(int n, int k) const noexcept {
    return n >= 0 && k >= k_min() && k <= k_max(n);
  }
  /// sqrt((n+1) C(bound_k(n), bound_m)), the row scale of the difference bound.
  [[nodiscard]] double row_scale(int n) const;

  /// w(n,k); zero outside the support.
  [[nodiscard]] Complex weight(int n, int k) const;
  /// w(n,k) - 1 on the support, computed without cancellation for the
  /// built-in rules.
  [[nodiscard]] Complex deviation(int n, int k) const;
  /// The rule's value ignoring the support mask (tables may carry stray entries).
  [[nodiscard]] Complex raw(int n, int k) const;

 private:
  WeightArray(WeightVariant variant, WeightRule rule, int m, double claimed_M, double claimed_L);

  WeightVariant variant_;
  WeightRule rule_;
  int m_;
  double claimed_M_;
  double claimed_L_;
};

/// Fejér ramp w(n,k) = 1 - (k - k_min)/(n + 2) stored as a table for n <= n_max.
/// Claims M = 1 and the given L.
WeightArray fejer_table(WeightVariant variant, int m, int n_max, double claimed_L);

/// Reads `n,k,re,im` rows (header required). Throws ParseError.
TableRule read_weight_table(std::istream& in);

struct Witness {
  std::string condition;  // "support", "bounded", "column_limit", "difference"
  int n = 0;
  int k = 0;
  double value = 0.0;
};

/// Audit of the four weight-array conditions over rows n <= scanned_n_max.
struct ValidationReport {
  int scanned_n_max = 0;
  bool cond_support_ok = true;
  double empirical_M = 0.0;
  bool cond_bounded_ok = true;
  /// max |w(n,k) - 1| over the trailing window, per checked column.
  std::map<int, double> column_gap;
  bool cond_column_ok = true;
  double empirical_L = 0.0;
  bool cond_difference_ok = true;
  bool pass = true;
  std::vector<Witness> witnesses;
};

inline constexpr double kDefaultColumnTolerance = 1e-6;

/// Scans all rows n <= n_max. Throws ScanTooSmall if n_max < 4.
///
/// The column limit is checked on columns k_min..m + n_max/2 over the top
/// quartile of rows. A column passes if its gap stays within tol_col, or if
/// the gap is nonincreasing through the window and falls at least like
/// (n+1)^{-1/2} between the window ends.
ValidationReport validate(const WeightArray& array, int n_max, double tol_col = kDefaultColumnTolerance);

/// Sum_k w(n,k+1) b_k z^k over k in [m, n+m] (Shifted) or [m-1, n+m-1] (Base).
TaylorPoly apply_weights_g(const WeightArray& array, const TaylorPoly& g, int n, int m);

/// p_n = sum_{k=m+1}^{n+m+1} w(n,k) a_k z^k. Throws VariantMismatch for a Base
/// array or an array built for a different order.
TaylorPoly modified_taylor(const WeightArray& array, const TaylorPoly& f, int m, int n);

}  // namespace dirsum
