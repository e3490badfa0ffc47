#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "ramsum/error.hpp"
#include "ramsum/kappa.hpp"

using namespace ramsum;

namespace {

// (1/pi) * integral_T^inf (1+t^2)^{-3/2} dt by substitution t = tan(theta):
// the integrand becomes cos(theta), integrated numerically as an oracle.
double tail_by_quadrature(double t_max) {
  const double a = std::atan(t_max), b = std::numbers::pi / 2.0;
  const int n = 20000;
  const double h = (b - a) / n;
  double s = std::cos(a) + std::cos(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * std::cos(a + i * h);
  return s * h / 3.0 / std::numbers::pi;
}

}  // namespace

TEST_CASE("truncated integral reproduces the tabulated values") {
  const struct {
    double u, expected;
  } table[] = {{-1.0, -0.0277}, {0.3, -0.0984}, {1.1, -0.2586}, {1.5, -0.2925}};
  for (const auto& row : table) {
    const KappaResult r = kappa0(row.u);
    INFO("u = " << row.u << " value = " << r.value);
    CHECK(std::abs(r.value - row.expected) <= 5e-4);
    CHECK(r.quad_error <= 1e-6);
    CHECK(r.tail_bound == doctest::Approx(tail_bound(60.0)));
  }
}

TEST_CASE("tail bound") {
  CHECK(tail_bound(60.0) <= 5e-5);
  CHECK(tail_bound(570.0) <= 1e-6);
  for (double t : {1.0, 60.0, 570.0}) CHECK(tail_bound(t) == doctest::Approx(tail_by_quadrature(t)).epsilon(1e-6));
}

TEST_CASE("step halving changes the truncated integral negligibly") {
  QuadratureSettings halved = kappa0_settings();
  halved.step /= 2.0;
  for (double u : {-1.0, 0.3, 1.1, 1.5}) CHECK(std::abs(kappa0(u).value - kappa0(u, halved).value) <= 1e-8);
}

TEST_CASE("full integral versus truncation") {
  for (double u : {-1.0, 0.3, 1.1, 1.5}) {
    const KappaResult full = kappa(u);
    CHECK(full.tail_bound <= 1e-6);
    CHECK(std::abs(full.value - kappa0(u).value) <= 5e-5);
  }
  CHECK(std::abs(kappa(30.0).value) <= 0.023);
  CHECK(std::abs(kappa(1.63).value - (-0.2943)) <= 1e-3);
}

TEST_CASE("imaginary residue of the unfolded integral vanishes") {
  const auto grid = kernel_grid(kappa0_settings());
  for (double u : {-1.0, 0.0, 0.3, 1.1, 1.5, 7.0}) CHECK(std::abs(grid->two_sided_imaginary(u)) <= 1e-9);
}

TEST_CASE("Lipschitz bound") {
  CHECK(kappa_lipschitz_check(1.1, 1.5));
  CHECK(kappa_lipschitz_check(0.0, 0.0));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) REQUIRE(kappa_lipschitz_check(d(rng), d(rng)));
}

TEST_CASE("golden-section minimum") {
  const KappaMinimum m = kappa_min(1.0, 2.5, 1e-3);
  CHECK(std::abs(m.u - 1.63) <= 1e-2);
  CHECK(std::abs(m.value - (-0.2943)) <= 1e-3);
  CHECK(m.value >= -0.4);
  CHECK_FALSE(m.at_boundary);

  const KappaMinimum degenerate = kappa_min(1.2, 1.2 + 1e-4, 1e-3);
  CHECK(degenerate.u == doctest::Approx(1.2 + 5e-5));
  CHECK(degenerate.evaluations == 1);

  // Decreasing on [0, 1]: the minimum runs into the right endpoint.
  CHECK(kappa_min(0.0, 1.0, 1e-3).at_boundary);
  CHECK_THROWS_AS(kappa_min(2.0, 1.0, 1e-3), DomainError);
}

TEST_CASE("decay scan") {
  const std::vector<double> us{1.7, 5.0, 10.0, 20.0, 40.0};
  const auto rows = kappa_decay_scan(us);
  REQUIRE(rows.size() == us.size());
  double envelope = 0.0;
  for (const auto& row : rows) {
    CHECK(row.within_bound);
    if (row.u >= 5.0) envelope = std::max(envelope, std::abs(row.value) * row.u);
  }
  CHECK(std::abs(rows[0].value) <= 0.4);
  CHECK(std::abs(rows[2].value) <= 0.067 + 1e-4);
  CHECK(envelope <= 0.68);
  CHECK(rows[2].reference == doctest::Approx(std::exp(-std::pow(10.0, 0.55))));
}

TEST_CASE("lower bound on the covered range") {
  for (int j = 0; j <= 68; ++j) {
    const double u = -1.7 + 0.05 * j;
    REQUIRE(kappa(u).value > -0.36);
  }
}

TEST_CASE("argument and settings validation") {
  CHECK_THROWS_AS(kappa(50.5), DomainError);
  QuadratureSettings coarse = kappa0_settings();
  coarse.step = 0.1;
  CHECK_THROWS_AS(kappa0(50.0, coarse), AccuracyError);
  QuadratureSettings bad;
  bad.step = 0.2;
  CHECK_THROWS_AS(kappa(0.0, bad), DomainError);
  bad = {};
  bad.t_max = 0.5;
  CHECK_THROWS_AS(kappa(0.0, bad), DomainError);
}
