#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dirsum/dirac.hpp"
#include "dirsum/douglas.hpp"
#include "dirsum/errors.hpp"

using namespace dirsum;

namespace {

constexpr double kPi = std::numbers::pi;

TaylorPoly random_poly(std::mt19937_64& rng, int start, int degree) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> c;
  for (int k = start; k <= degree; ++k) c.emplace_back(unit(rng), unit(rng));
  return TaylorPoly(start, std::move(c));
}

// s points spread around the circle with jitter, pairwise gap at least pi/s.
std::vector<UnitPoint> spread_points(std::mt19937_64& rng, int s) {
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  std::uniform_real_distribution<double> turn(0.0, 2 * kPi);
  const double offset = turn(rng);
  std::vector<UnitPoint> out;
  for (int j = 0; j < s; ++j) out.emplace_back(offset + 2 * kPi * (j + jitter(rng)) / s);
  return out;
}

double max_coeff_gap(const TaylorPoly& a, const TaylorPoly& b) {
  double gap = 0.0;
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) gap = std::max(gap, std::abs(a.coeff(k) - b.coeff(k)));
  return gap;
}

const TaylorPoly kZPlusZ4 = TaylorPoly::from_dense({0.0, 1.0, 0.0, 0.0, 1.0});

}  // namespace

TEST_CASE("tail sums") {
  CHECK(tail_sum(kZPlusZ4, UnitPoint(0.0), 4) == Complex{1.0});
  CHECK(tail_sum(kZPlusZ4, UnitPoint(0.0), 1) == Complex{2.0});
  CHECK(std::abs(tail_sum(TaylorPoly::monomial(3), UnitPoint(kPi / 2), 2) - Complex{0.0, 1.0}) < 1e-15);
  CHECK(tail_sum(kZPlusZ4, UnitPoint(0.0), 5) == Complex{});
}

TEST_CASE("tail sums are quotient coefficients") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int trial = 0; trial < 1000; ++trial) {
    const int start = static_cast<int>(rng() % 4);
    const TaylorPoly f = random_poly(rng, start, start + 1 + static_cast<int>(rng() % 40));
    const UnitPoint lambda(angle(rng));
    const TaylorPoly b = difference_quotient(f, lambda).quotient;
    const int j0 = std::max(1, f.start()) + static_cast<int>(rng() % (f.degree() - std::max(1, f.start()) + 1));
    REQUIRE(std::abs(tail_sum(f, lambda, j0) - b.coeff(j0 - 1)) <= 1e-12);
  }
}

TEST_CASE("single-point correction examples") {
  auto q = single_point_correction(kZPlusZ4, UnitPoint(0.0), 1, 1);
  CHECK(q.poly == TaylorPoly::from_dense({0.0, 1.0, 1.0}));
  CHECK(boundary_value(q.poly, UnitPoint(0.0)) == Complex{2.0});
  q = single_point_correction(kZPlusZ4, UnitPoint(0.0), 1, 3);
  CHECK(q.poly == kZPlusZ4);
  for (int m = 1; m <= 5; ++m) {
    const auto p = single_point_correction(TaylorPoly::monomial(m), UnitPoint(1.234), m, 0);
    CHECK(max_coeff_gap(p.poly, TaylorPoly::monomial(m)) < 1e-15);
  }
  CHECK_THROWS_AS(single_point_correction(TaylorPoly::monomial(1), UnitPoint(0.0), 2, 1), InvalidSupport);
}

TEST_CASE("two-point Vandermonde correction by hand") {
  const std::vector<UnitPoint> pm{UnitPoint(0.0), UnitPoint(kPi)};
  const auto [p, sys] = vandermonde_correct(kZPlusZ4, pm, 1, 2);
  CHECK(max_coeff_gap(p.poly, TaylorPoly::from_dense({0.0, 1.0, 1.0})) < 1e-14);
  CHECK(std::abs(boundary_value(p.poly, pm[0]) - Complex{2.0}) < 1e-14);
  CHECK(std::abs(boundary_value(p.poly, pm[1])) < 1e-14);
  CHECK(sys.determinant_modulus == doctest::Approx(2.0).epsilon(1e-15));

  const auto [pz, sz] = vandermonde_correct(TaylorPoly::monomial(1), pm, 1, 2);
  CHECK(max_coeff_gap(pz.poly, TaylorPoly::monomial(1)) < 1e-15);
  for (const auto& r : sz.rhs) CHECK(r == Complex{});
  for (const auto& b : sz.solution) CHECK(std::abs(b) < 1e-15);
}

TEST_CASE("one-point system matches the single-point correction") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 15);
    const TaylorPoly f = random_poly(rng, m, m + 25);
    const UnitPoint lambda(angle(rng));
    const std::vector<UnitPoint> one{lambda};
    const auto v = vandermonde_correct(f, one, m, n).first.poly;
    const auto s = single_point_correction(f, lambda, m, n).poly;
    REQUIRE(v == s);
  }
}

TEST_CASE("correction interpolates and keeps the low coefficients") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const int s = 1 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = s + static_cast<int>(rng() % 12);
    const TaylorPoly f = random_poly(rng, m, m + n + static_cast<int>(rng() % 20));
    const auto pts = spread_points(rng, s);
    const auto [p, sys] = vandermonde_correct(f, pts, m, n);
    for (const auto& l : pts) {
      const Complex want = boundary_value(f, l);
      REQUIRE(std::abs(boundary_value(p.poly, l) - want) <= 1e-9 * (1.0 + std::abs(want)));
    }
    for (int k = m; k <= n + m - s; ++k) REQUIRE(p.poly.coeff(k) == f.coeff(k));
    REQUIRE(p.poly.degree() <= n + m);
    REQUIRE(std::abs(std::abs(sys.determinant) - sys.determinant_modulus) <= 1e-8 * sys.determinant_modulus);
  }
}

TEST_CASE("correction does not depend on the order of the points") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 2);
    const int n = s + static_cast<int>(rng() % 8);
    const TaylorPoly f = random_poly(rng, m, m + n + 10);
    auto pts = spread_points(rng, s);
    const auto base = vandermonde_correct(f, pts, m, n).second.solution;
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto other = vandermonde_correct(f, pts, m, n).second.solution;
    for (std::size_t i = 0; i < base.size(); ++i) REQUIRE(std::abs(base[i] - other[i]) <= 1e-10);
  }
}

TEST_CASE("recursion reproduces the Vandermonde correction") {
  const std::vector<UnitPoint> pm{UnitPoint(0.0), UnitPoint(kPi)};
  CHECK(max_coeff_gap(recursion_build(kZPlusZ4, pm, 1, 2), TaylorPoly::from_dense({0.0, 1.0, 1.0})) < 1e-10);
  CHECK(max_coeff_gap(recursion_build(TaylorPoly::monomial(1), pm, 1, 2), TaylorPoly::monomial(1)) < 1e-15);

  std::mt19937_64 rng(55);
  const std::vector<UnitPoint> roots{UnitPoint(0.0), UnitPoint(2 * kPi / 3), UnitPoint(4 * kPi / 3)};
  const TaylorPoly f12 = random_poly(rng, 1, 12);
  CHECK(max_coeff_gap(recursion_build(f12, roots, 1, 4), vandermonde_correct(f12, roots, 1, 4).first.poly) <= 1e-9);

  for (int s = 2; s <= 4; ++s) {
    for (int trial = 0; trial < 50; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 3);
      const int n = s + static_cast<int>(rng() % 10);
      const TaylorPoly f = random_poly(rng, m, m + n + static_cast<int>(rng() % 15));
      const auto pts = spread_points(rng, s);
      REQUIRE(max_coeff_gap(recursion_build(f, pts, m, n), vandermonde_correct(f, pts, m, n).first.poly) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(recursion_build(kZPlusZ4, std::vector<UnitPoint>{UnitPoint(0.0)}, 1, 2), InvalidArgument);
}

TEST_CASE("Vandermonde argument checks") {
  const std::vector<UnitPoint> pm{UnitPoint(0.0), UnitPoint(kPi)};
  CHECK_THROWS_AS(vandermonde_correct(kZPlusZ4, pm, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(vandermonde_correct(kZPlusZ4, std::vector<UnitPoint>{}, 1, 3), InvalidArgument);
  const std::vector<UnitPoint> dup{UnitPoint(0.0), UnitPoint(1e-11)};
  CHECK_THROWS_AS(vandermonde_correct(kZPlusZ4, dup, 1, 3), DuplicatePoints);
  std::vector<UnitPoint> many;
  for (int j = 0; j < 17; ++j) many.emplace_back(2 * kPi * j / 17);
  CHECK_THROWS_AS(vandermonde_correct(TaylorPoly::monomial(1), many, 1, 20), InvalidArgument);
  many.pop_back();
  CHECK_NOTHROW(vandermonde_correct(TaylorPoly::monomial(1), many, 1, 20));
  // Distinct but nearly coincident atoms drive a pivot below the floor.
  const std::vector<UnitPoint> close{UnitPoint(0.0), UnitPoint(2e-9), UnitPoint(4e-9), UnitPoint(6e-9)};
  CHECK_THROWS_AS(vandermonde_correct(kZPlusZ4, close, 1, 5), SingularSystem);
}

TEST_CASE("Dirac convergence experiments") {
  const std::vector<UnitPoint> pm{UnitPoint(0.0), UnitPoint(kPi)};
  const Measure two = Measure::point_masses({{pm[0], 1.0}, {pm[1], 1.0}});

  std::mt19937_64 rng(56);
  const TaylorPoly poly = random_poly(rng, 1, 9);
  // Bitwise zero once no coefficient needs correcting (n + m - s >= deg f);
  // zero up to rounding once f fits under the top of the window (n + m >= deg f).
  for (const auto& r : converge_dirac(poly, two, 1, 2, 15)) {
    if (r.n + 1 - 2 >= poly.degree()) {
      CHECK(r.norm_sq == 0.0);
    } else if (r.n + 1 >= poly.degree()) {
      CHECK(r.norm_sq < 1e-25);
    } else {
      CHECK(r.norm_sq > 0.0);
    }
  }

  std::vector<Complex> c;
  for (int k = 1; k <= 80; ++k) c.emplace_back(1.0 / (k * k));
  const TaylorPoly f(1, std::move(c));
  const auto records = converge_dirac(f, two, 1, 2, 60);
  CHECK(records.back().norm_sq < 1e-4);
  CHECK(records.back().norm_sq < records.front().norm_sq);

  const auto triple = converge_dirac(f, Measure::dirac(pm[0], 3.0), 1, 2, 60);
  for (const auto& r : triple) {
    const auto q = single_point_correction(f, pm[0], 1, r.n);
    const double single = local_norm(q.poly - f, pm[0], 1);
    REQUIRE(std::abs(r.norm_sq - 3.0 * single) <= 1e-10 * std::max(1.0, r.norm_sq));
  }

  CHECK_THROWS_AS(converge_dirac(f, two, 1, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(converge_dirac(f, Measure::uniform(), 1, 2, 5), InvalidArgument);
}
