#include "dirsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dirsum/errors.hpp"
#include "dirsum/parallel.hpp"

namespace dirsum {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPanelOrder = 8;

struct AngularRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // sum to 2*pi
};

AngularRule trapezoid(int count) {
  AngularRule rule;
  rule.nodes.resize(static_cast<std::size_t>(count));
  rule.weights.assign(static_cast<std::size_t>(count), kTwoPi / count);
  for (int i = 0; i < count; ++i) rule.nodes[static_cast<std::size_t>(i)] = kTwoPi * i / count;
  return rule;
}

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  return w < 0.0 ? w + kTwoPi : w;
}

// Composite Gauss panels whose breakpoints grade toward each atom, matched to
// the width 1 - r of the Poisson peak on this ring.
AngularRule graded_rule(int angular_nodes, const Measure& mu, double r, const GaussRule& panel) {
  const int base_panels = std::max(1, angular_nodes / kPanelOrder);
  std::vector<double> cuts;
  for (int i = 0; i < base_panels; ++i) cuts.push_back(kTwoPi * i / base_panels);
  const double width = std::max(1.0 - r, 1e-14);
  for (const auto& atom : mu.atoms()) {
    const double phi = atom.point.theta();
    cuts.push_back(wrap_angle(phi));
    for (double d = width; d < std::numbers::pi; d *= 2.0) {
      cuts.push_back(wrap_angle(phi + d));
      cuts.push_back(wrap_angle(phi - d));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-15; }),
             cuts.end());

  AngularRule rule;
  rule.nodes.reserve(cuts.size() * panel.nodes.size());
  rule.weights.reserve(cuts.size() * panel.nodes.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = i + 1 < cuts.size() ? cuts[i + 1] : cuts.front() + kTwoPi;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t q = 0; q < panel.nodes.size(); ++q) {
      rule.nodes.push_back(mid + half * panel.nodes[q]);
      rule.weights.push_back(half * panel.weights[q]);
    }
  }
  return rule;
}

double falling_factorial(int k, int m) {
  double out = 1.0;
  for (int i = 0; i < m; ++i) out *= static_cast<double>(k - i);
  return out;
}

}  // namespace

GaussRule gauss_legendre(int count, double a, double b) {
  if (count < 1) throw InvalidArgument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(count));
  rule.weights.resize(static_cast<std::size_t>(count));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int pairs = (count + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= count; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(count - 1 - i);
    rule.nodes[lo] = mid - half * x;
    rule.nodes[hi] = mid + half * x;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  return rule;
}

double poisson_kernel(Complex z, const Measure& mu) {
  const double r2 = std::norm(z);
  if (!(std::sqrt(r2) < 1.0 - 1e-12)) {
    throw OutsideDisk("poisson_kernel: |z| = " + std::to_string(std::sqrt(r2)) + " is not inside the disk");
  }
  if (mu.is_uniform()) return 1.0;
  double total = 0.0;
  for (const auto& atom : mu.atoms()) total += atom.mass * (1.0 - r2) / std::norm(z - atom.point.value());
  return total;
}

TaylorPoly derivative(const TaylorPoly& f, int m) {
  if (m < 0) throw InvalidArgument("derivative: negative order");
  if (f.degree() < m) return {};
  const int lo = std::max(f.start(), m);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(f.degree() - lo + 1));
  for (int k = lo; k <= f.degree(); ++k) out.push_back(falling_factorial(k, m) * f.coeff(k));
  return TaylorPoly(lo - m, std::move(out));
}

double quadrature_value(const TaylorPoly& f, const Measure& mu, int m, const QuadratureGrid& grid) {
  if (m < 1) throw InvalidArgument("quadrature: order must be >= 1");
  if (grid.radial_nodes < 16 || grid.angular_nodes < 64) {
    throw InvalidArgument("quadrature grid needs >= 16 radial and >= 64 angular nodes");
  }
  const TaylorPoly fm = derivative(f, m);
  if (fm.is_zero()) return 0.0;

  const GaussRule radial = gauss_legendre(grid.radial_nodes, 0.0, 1.0);
  const GaussRule panel = gauss_legendre(kPanelOrder, -1.0, 1.0);
  const bool graded = grid.singular_refinement && !mu.is_uniform();
  const AngularRule uniform_rule = trapezoid(grid.angular_nodes);

  std::vector<double> rings(radial.nodes.size());
  parallel_for(rings.size(), [&](std::size_t i) {
    const double t = radial.nodes[i];
    const double r = std::sqrt(t);
    const AngularRule local = graded ? graded_rule(grid.angular_nodes, mu, r, panel) : AngularRule{};
    const AngularRule& rule = graded ? local : uniform_rule;
    CompensatedSum ring;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const Complex z = std::polar(r, rule.nodes[q]);
      ring.add(rule.weights[q] * std::norm(evaluate(fm, z)) * poisson_kernel(z, mu));
    }
    rings[i] = radial.weights[i] * std::pow(1.0 - t, m - 1) * ring.value() / kTwoPi;
  });

  CompensatedSum total;
  for (double v : rings) total.add(v);
  double norm = 1.0;
  for (int i = 2; i <= m; ++i) norm *= i;      // m!
  for (int i = 2; i <= m - 1; ++i) norm *= i;  // (m-1)!
  return total.value() / norm;
}

QuadratureResult quadrature_norm_estimate(const TaylorPoly& f, const Measure& mu, int m,
                                          const QuadratureGrid& grid) {
  QuadratureResult out;
  out.value = quadrature_value(f, mu, m, grid);
  out.refined_value = quadrature_value(f, mu, m, grid.refined());
  out.error_estimate = std::abs(out.value - out.refined_value);
  if (out.error_estimate > 1e-3 * std::abs(out.refined_value)) {
    throw NonConvergent("quadrature: refinement changed the value from " + std::to_string(out.value) +
                        " to " + std::to_string(out.refined_value));
  }
  return out;
}

double quadrature_norm(const TaylorPoly& f, const Measure& mu, int m, const QuadratureGrid& grid) {
  return quadrature_norm_estimate(f, mu, m, grid).value;
}

}  // namespace dirsum
