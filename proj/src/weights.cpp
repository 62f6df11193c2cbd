#include "dirsum/weights.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "dirsum/errors.hpp"

namespace dirsum {

namespace {

constexpr std::size_t kMaxWitnessesPerCondition = 8;
constexpr double kClaimSlack = 1e-9;

void add_witness(ValidationReport& report, const char* condition, int n, int k, double value) {
  std::size_t count = 0;
  for (const auto& w : report.witnesses) count += (w.condition == condition);
  if (count < kMaxWitnessesPerCondition) report.witnesses.push_back({condition, n, k, value});
}

}  // namespace

WeightArray::WeightArray(WeightVariant variant, WeightRule rule, int m, double claimed_M,
                         double claimed_L)
    : variant_(variant), rule_(std::move(rule)), m_(m), claimed_M_(claimed_M), claimed_L_(claimed_L) {
  if (m < 1) throw InvalidArgument("weight array order must be >= 1");
}

WeightArray WeightArray::boxcar(WeightVariant variant, int m) {
  return {variant, BoxcarRule{}, m, 1.0, 0.0};
}

WeightArray WeightArray::tapered(WeightVariant variant, int m, double eps) {
  if (!std::isfinite(eps) || eps < 0.0) throw InvalidArgument("taper eps must be finite and >= 0");
  // n * eps / row_scale(n) < eps whenever C(bound_k, bound_m) >= n + 1, so
  // 1 + eps bounds every entry (Base with m = 1 is the exception and fails
  // validation, as it should).
  return {variant, TaperedRule{eps}, m, 1.0 + eps, eps};
}

WeightArray WeightArray::table(WeightVariant variant, int m, TableRule table, double claimed_M,
                               double claimed_L) {
  return {variant, std::move(table), m, claimed_M, claimed_L};
}

std::string WeightArray::describe() const {
  std::ostringstream os;
  os << (variant_ == WeightVariant::Shifted ? "shifted" : "base") << ' ';
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, BoxcarRule>) {
          os << "boxcar";
        } else if constexpr (std::is_same_v<R, TaperedRule>) {
          os << "tapered(" << r.eps << ")";
        } else {
          os << "table(" << r.entries.size() << " entries)";
        }
      },
      rule_);
  os << " m=" << m_;
  return os.str();
}

double WeightArray::row_scale(int n) const {
  const double b = variant_ == WeightVariant::Shifted ? binom(m_ + n + 1, m_) : binom(m_ + n, m_ - 1);
  return std::sqrt(static_cast<double>(n + 1) * b);
}

Complex WeightArray::raw(int n, int k) const {
  if (const auto* t = std::get_if<TableRule>(&rule_)) {
    auto it = t->entries.find({n, k});
    return it == t->entries.end() ? Complex{} : it->second;
  }
  if (!in_support(n, k)) return {};
  return Complex{1.0, 0.0} + deviation(n, k);
}

Complex WeightArray::weight(int n, int k) const {
  if (!in_support(n, k)) return {};
  return raw(n, k);
}

Complex WeightArray::deviation(int n, int k) const {
  if (!in_support(n, k)) return {-1.0, 0.0};
  return std::visit(
      [&](const auto& r) -> Complex {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, BoxcarRule>) {
          return {};
        } else if constexpr (std::is_same_v<R, TaperedRule>) {
          return {r.eps * static_cast<double>(k - k_min()) / row_scale(n), 0.0};
        } else {
          auto it = r.entries.find({n, k});
          return (it == r.entries.end() ? Complex{} : it->second) - 1.0;
        }
      },
      rule_);
}

WeightArray fejer_table(WeightVariant variant, int m, int n_max, double claimed_L) {
  auto shape = WeightArray::boxcar(variant, m);
  TableRule t;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = shape.k_min(); k <= shape.k_max(n); ++k) {
      t.entries[{n, k}] = 1.0 - static_cast<double>(k - shape.k_min()) / (n + 2);
    }
  }
  return WeightArray::table(variant, m, std::move(t), 1.0, claimed_L);
}

TableRule read_weight_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("weight table: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,k,re,im") throw ParseError("weight table: expected header 'n,k,re,im', got '" + line + "'");
  TableRule t;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string fields[4];
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(row, fields[i], ',')) {
        throw ParseError("weight table line " + std::to_string(lineno) + ": expected 4 fields");
      }
    }
    std::string extra;
    if (std::getline(row, extra, ',')) {
      throw ParseError("weight table line " + std::to_string(lineno) + ": too many fields");
    }
    try {
      std::size_t pos = 0;
      const int n = std::stoi(fields[0], &pos);
      if (pos != fields[0].size()) throw std::invalid_argument("n");
      const int k = std::stoi(fields[1], &pos);
      if (pos != fields[1].size()) throw std::invalid_argument("k");
      const double re = std::stod(fields[2]);
      const double im = std::stod(fields[3]);
      if (!std::isfinite(re) || !std::isfinite(im)) throw std::invalid_argument("value");
      if (!t.entries.emplace(std::pair{n, k}, Complex{re, im}).second) {
        throw ParseError("weight table line " + std::to_string(lineno) + ": duplicate entry");
      }
    } catch (const std::logic_error&) {
      throw ParseError("weight table line " + std::to_string(lineno) + ": malformed number");
    }
  }
  return t;
}

ValidationReport validate(const WeightArray& array, int n_max, double tol_col) {
  if (n_max < 4) throw ScanTooSmall("validate: n_max must be >= 4, got " + std::to_string(n_max));
  ValidationReport report;
  report.scanned_n_max = n_max;

  if (const auto* t = std::get_if<TableRule>(&array.rule())) {
    for (const auto& [key, value] : t->entries) {
      const auto [n, k] = key;
      if (n > n_max) continue;
      if (!array.in_support(n, k) && value != Complex{}) {
        report.cond_support_ok = false;
        add_witness(report, "support", n, k, std::abs(value));
      }
    }
  }

  const double m_limit = array.claimed_M() * (1.0 + kClaimSlack);
  const double l_limit = array.claimed_L() * (1.0 + kClaimSlack);
  for (int n = 0; n <= n_max; ++n) {
    const double scale = array.row_scale(n);
    for (int k = array.k_min(); k <= array.k_max(n); ++k) {
      const double mag = std::abs(array.weight(n, k));
      report.empirical_M = std::max(report.empirical_M, mag);
      if (mag > m_limit) {
        report.cond_bounded_ok = false;
        add_witness(report, "bounded", n, k, mag);
      }
      if (k < array.k_max(n)) {
        const double diff = std::abs(array.deviation(n, k + 1) - array.deviation(n, k)) * scale;
        report.empirical_L = std::max(report.empirical_L, diff);
        if (diff > l_limit) {
          report.cond_difference_ok = false;
          add_witness(report, "difference", n, k, diff);
        }
      }
    }
  }

  const int n0 = n_max - n_max / 4;
  const int k_last = array.order() + n_max / 2;
  for (int k = array.k_min(); k <= k_last; ++k) {
    double gap = 0.0;
    bool nonincreasing = true;
    double previous = std::abs(array.deviation(n0, k));
    for (int n = n0; n <= n_max; ++n) {
      const double g = std::abs(array.deviation(n, k));
      gap = std::max(gap, g);
      if (g > previous) nonincreasing = false;
      previous = g;
    }
    report.column_gap[k] = gap;
    if (gap <= tol_col) continue;
    const double first = std::abs(array.deviation(n0, k));
    const double last = std::abs(array.deviation(n_max, k));
    const double decay = std::sqrt(static_cast<double>(n0 + 1) / (n_max + 1));
    if (!(nonincreasing && last <= first * decay)) {
      report.cond_column_ok = false;
      add_witness(report, "column_limit", n_max, k, gap);
    }
  }

  report.pass = report.cond_support_ok && report.cond_bounded_ok && report.cond_column_ok &&
                report.cond_difference_ok;
  return report;
}

TaylorPoly apply_weights_g(const WeightArray& array, const TaylorPoly& g, int n, int m) {
  if (n < 0 || m < 1) throw InvalidArgument("apply_weights_g: need n >= 0, m >= 1");
  if (array.order() != m) {
    throw VariantMismatch("weight array built for order " + std::to_string(array.order()) +
                          ", used with order " + std::to_string(m));
  }
  const int lo = array.variant() == WeightVariant::Shifted ? m : m - 1;
  const int hi = lo + n;
  std::vector<Complex> out(static_cast<std::size_t>(n + 1));
  for (int k = lo; k <= hi; ++k) {
    out[static_cast<std::size_t>(k - lo)] = array.weight(n, k + 1) * g.coeff(k);
  }
  return TaylorPoly(lo, std::move(out));
}

TaylorPoly modified_taylor(const WeightArray& array, const TaylorPoly& f, int m, int n) {
  if (array.variant() != WeightVariant::Shifted) {
    throw VariantMismatch("modified_taylor needs a shifted weight array");
  }
  if (array.order() != m) {
    throw VariantMismatch("weight array built for order " + std::to_string(array.order()) +
                          ", used with order " + std::to_string(m));
  }
  if (n < 0) throw InvalidArgument("modified_taylor: n must be >= 0");
  std::vector<Complex> out(static_cast<std::size_t>(n + 1));
  for (int k = m + 1; k <= n + m + 1; ++k) {
    out[static_cast<std::size_t>(k - m - 1)] = array.weight(n, k) * f.coeff(k);
  }
  return TaylorPoly(m + 1, std::move(out));
}

}  // namespace dirsum
