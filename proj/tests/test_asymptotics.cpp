#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ramsum/asymptotics.hpp"
#include "ramsum/error.hpp"

using namespace ramsum;

namespace {

const double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

}  // namespace

TEST_CASE("first-moment main term") {
  CHECK(std::abs(c1_main(100.0, 1e6) - 998480.18) <= 0.01);
  CHECK(c1_main(2.0, 2.0) == doctest::Approx(2.0 - 0.6079271));
  for (double y : {50.0, 1e3, 1e7}) CHECK(c1_main(40.0, y) - y == doctest::Approx(-1600.0 / (4.0 * kZeta2)));
  CHECK_THROWS_AS(c1_main(10.0, 9.0), DomainError);
}

TEST_CASE("first-moment envelope") {
  CHECK(c1_envelope(100.0, 1e6) == doctest::Approx(46052.70).epsilon(1e-6));
  CHECK(c1_envelope(10.0, 1e9) == doctest::Approx(23025.85).epsilon(1e-6));
  // Linear in x apart from the cubic term.
  const double y = 1e12;
  CHECK(c1_envelope(20.0, y) - 8000.0 / y == doctest::Approx(2.0 * (c1_envelope(10.0, y) - 1000.0 / y) * std::log(20.0) / std::log(10.0)));
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(10.0, 100.0).tag == Regime::kOutside);
  CHECK(classify_regime(10.0, 1e6).tag == Regime::kPartI);
  CHECK(classify_regime(1e30, 1e70).tag == Regime::kPartII);
  CHECK(classify_regime(1e30, 1e60).tag == Regime::kOutside);
  CHECK(classify_regime(2.0, 1e9).tag == Regime::kOutside);
  CHECK(classify_regime(10.0, 1e6, 12.0).b_param == 12.0);

  // (ln 3)^{10.5} ~ 2.68 < 3, so y = 6 (ln 3)^21 ~ 43 clears x^2 (ln x)^B ~ 24.
  CHECK(classify_regime(3.0, 6.0 * std::pow(std::log(3.0), 21.0)).tag == Regime::kPartI);
  CHECK(to_string(Regime::kPartII) == "T2_PART_II");
}

TEST_CASE("second-moment main term") {
  const auto never = [](double) -> double { FAIL("kappa must not be consulted in part (i)"); return 0.0; };
  const C2Prediction part_i = c2_main(10.0, 1e6, kDefaultB, never);
  CHECK(part_i.regime.tag == Regime::kPartI);
  CHECK(part_i.predicted == doctest::Approx(3.03964e7).epsilon(1e-5));
  CHECK_FALSE(part_i.kappa.has_value());

  const auto constant = [](double) { return -0.25; };
  const C2Prediction near = c2_main(100.0, 1e4 * std::numbers::e, kDefaultB, constant);
  CHECK(near.u == doctest::Approx(1.0));
  CHECK(near.predicted == doctest::Approx(1e8 * std::numbers::e / (2.0 * kZeta2) * 0.5));

  // The correction is read at ln(x^2 / y).
  double seen = 0.0;
  c2_main(100.0, 1e4 * std::exp(-1.5), kDefaultB, [&](double v) { seen = v; return 0.0; });
  CHECK(seen == doctest::Approx(1.5));

  const auto provider = default_kappa_provider();
  const C2Prediction below = c2_main(100.0, 1e4 * std::exp(-1.5), kDefaultB, provider);
  const double base = 1e4 * std::exp(-1.5) * 1e4 / (2.0 * kZeta2);
  CHECK(std::abs(below.predicted / base - 0.415) <= 1e-3);

  CHECK_THROWS_AS(c2_main(10.0, 5.0, kDefaultB, constant), DomainError);
}

TEST_CASE("part (ii) formula tends to part (i) for large u") {
  const auto provider = default_kappa_provider();
  const double x = 100.0, y = x * x * std::exp(20.0);
  const double part_i = y * x * x / (2.0 * kZeta2);
  const double part_ii = y * x * x / (2.0 * kZeta2) * (1.0 + 2.0 * provider(-20.0));
  CHECK(std::abs(part_ii - part_i) / part_i <= 2.0 * 0.67 / 20.0 + 1e-4);
}

TEST_CASE("compare examples") {
  const auto t = build_sieve(100);
  const ComparisonReport small = compare({1, 5, 1}, t);
  CHECK(small.exact == 5);
  CHECK(small.predicted == doctest::Approx(5.0 - 1.0 / (4.0 * kZeta2)));
  CHECK(small.rel_error == doctest::Approx(0.0314).epsilon(0.01));
  CHECK_FALSE(small.u.has_value());

  const ComparisonReport first = compare({100, 1000000, 1}, t);
  CHECK(first.rel_error <= 0.05);
  CHECK(first.envelope == doctest::Approx(c1_envelope(100.0, 1e6)));

  const ComparisonReport second = compare({50, 1000000, 2}, t);
  REQUIRE(second.u.has_value());
  CHECK(*second.u == doctest::Approx(std::log(400.0)));
  REQUIRE(second.kappa.has_value());
  CHECK(std::abs(*second.kappa) <= 0.67 / std::log(400.0));
  CHECK(second.exact > 0);

  try {
    compare({10, 100, 5}, t);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "no asymptotic for k=5");
  }
}

TEST_CASE("first-moment deviation along y = x^3") {
  // |C_1 - main| / y at x = 20, 50, 100, 200, 400, 800, from an independent
  // exact computation. The psi-sum term makes the sequence non-monotone
  // (x = 200 is worse than x = 100) while the overall trend is downward.
  const auto t = build_sieve(800);
  const double observed[] = {2.349e-3, 3.196e-4, 3.082e-5, 5.416e-5, 4.011e-5, 3.163e-6};
  int i = 0;
  for (std::int64_t x : {20, 50, 100, 200, 400, 800}) {
    const std::int64_t y = x * x * x;
    const ComparisonReport r = compare({x, y, 1}, t);
    const double deviation = std::abs(to_double(r.exact) - r.predicted);
    CHECK(deviation / r.envelope <= 10.0);
    CHECK(deviation / static_cast<double>(y) == doctest::Approx(observed[i++]).epsilon(1e-3));
  }
}

TEST_CASE("second-moment ratio near y = x^2") {
  const auto t = build_sieve(200);
  for (double u : {0.3, 1.1, 1.5}) {
    for (double sign : {1.0, -1.0}) {
      const auto y = static_cast<std::int64_t>(std::llround(200.0 * 200.0 * std::exp(sign * u)));
      const ComparisonReport r = compare({200, y, 2}, t);
      const double ratio = to_double(r.exact) / r.predicted;
      INFO("u = " << sign * u << " ratio = " << ratio);
      CHECK(std::abs(ratio - 1.0) <= 0.05);
    }
  }
}
