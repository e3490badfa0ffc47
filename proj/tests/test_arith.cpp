#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ramsum/arith.hpp"
#include "ramsum/error.hpp"
#include "ramsum/zeta.hpp"

using namespace ramsum;

namespace {

// Trial-division oracles, independent of the sieve.
int mobius_by_trial(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::int64_t totient_by_count(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t a = 1; a <= n; ++a) c += gcd(a, n) == 1;
  return c;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("sieve tables on small ranges") {
  const auto t10 = build_sieve(10);
  const std::vector<int> expected{1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (int n = 1; n <= 10; ++n) CHECK(t10.mobius(n) == expected[n - 1]);
  CHECK(t10.mertens(10) == -1);
  CHECK(mertens(10, t10) == -1);
  CHECK(mertens(1, t10) == 1);
  CHECK(mertens(2, t10) == 0);

  const auto t1 = build_sieve(1);
  CHECK(t1.mertens(0) == 0);
  CHECK(t1.mertens(1) == 1);
}

TEST_CASE("sieve invariants against trial division") {
  const auto t = build_sieve(5000);
  std::int64_t running = 0;
  for (std::int64_t n = 1; n <= 5000; ++n) {
    REQUIRE(t.mobius(n) == mobius_by_trial(n));
    running += t.mobius(n);
    REQUIRE(t.mertens(n) == running);
    if (n >= 2) {
      const std::int64_t p = t.spf(n);
      REQUIRE(n % p == 0);
      REQUIRE(mobius_by_trial(p) == -1);
      for (std::int64_t q = 2; q < p; ++q) REQUIRE(n % q != 0);
    }
  }
}

TEST_CASE("sieve capacity and range errors") {
  CHECK_THROWS_AS(build_sieve(0), CapacityError);
  CHECK_THROWS_AS(build_sieve(kSieveCap), CapacityError);
  const auto t = build_sieve(10);
  CHECK_THROWS_AS(t.mertens(11), RangeError);
  CHECK_THROWS_AS(mertens(11, t), RangeError);
  CHECK_THROWS_AS(totient(11, t), RangeError);
  CHECK_THROWS_AS(ramanujan_sum(11, 1, t), RangeError);
}

TEST_CASE("totient") {
  const auto t = build_sieve(1000);
  CHECK(totient(1, t) == 1);
  CHECK(totient(6, t) == 2);
  CHECK(totient(997, t) == 996);
  for (std::int64_t n = 1; n <= 300; ++n) REQUIRE(totient(n, t) == totient_by_count(n));
}

TEST_CASE("factorize falls back to trial division above the table") {
  const auto t = build_sieve(10);
  const auto f = factorize(2 * 2 * 3 * 101, t);
  REQUIRE(f.size() == 3);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 2);
  CHECK(f[1].prime == 3);
  CHECK(f[2].prime == 101);
}

TEST_CASE("Ramanujan sum examples") {
  const auto t = build_sieve(200);
  for (std::int64_t n = 1; n <= 50; ++n) CHECK(ramanujan_sum(1, n, t) == 1);
  CHECK(ramanujan_sum(6, 4, t) == -1);
  CHECK(ramanujan_sum(4, 2, t) == -2);
  CHECK(ramanujan_sum_divisor(6, 4, t) == -1);
  CHECK(ramanujan_sum_divisor(4, 2, t) == -2);
  for (std::int64_t q = 1; q <= 40; ++q)
    for (std::int64_t m = 1; m <= 5; ++m) CHECK(ramanujan_sum(q, q * m, t) == totient(q, t));

  const Complex a = ramanujan_sum_exponential(1, 7);
  CHECK(a.real() == doctest::Approx(1.0));
  CHECK(a.imag() == doctest::Approx(0.0));
  const Complex b = ramanujan_sum_exponential(4, 2);
  CHECK(std::abs(b - Complex(-2.0, 0.0)) < 1e-10);
  const Complex c = ramanujan_sum_exponential(5, 1);
  CHECK(std::abs(c - Complex(-1.0, 0.0)) < 1e-10);

  CHECK_THROWS_AS(ramanujan_sum_exponential(kExponentialSumCap + 1, 1), CapacityError);
}

TEST_CASE("three forms of c_q(n) agree for q, n <= 200") {
  const auto t = build_sieve(200);
  for (std::int64_t q = 1; q <= 200; ++q) {
    for (std::int64_t n = 1; n <= 200; ++n) {
      const std::int64_t divisor_form = ramanujan_sum_divisor(q, n, t);
      REQUIRE(ramanujan_sum(q, n, t) == divisor_form);
      const Complex e = ramanujan_sum_exponential(q, n);
      REQUIRE(std::abs(e.real() - static_cast<double>(divisor_form)) <= 1e-8);
      REQUIRE(std::abs(e.imag()) <= 1e-8);
    }
  }
}

TEST_CASE("c_q(n) properties") {
  const auto t = build_sieve(10000);
  for (std::int64_t q = 1; q <= 10000; ++q) REQUIRE(ramanujan_sum(q, 1, t) == t.mobius(q));

  // Multiplicative in q over coprime pairs.
  for (std::int64_t q1 = 1; q1 <= 40; ++q1)
    for (std::int64_t q2 = 1; q2 <= 40; ++q2) {
      if (gcd(q1, q2) != 1) continue;
      for (std::int64_t n = 1; n <= 100; ++n)
        REQUIRE(ramanujan_sum(q1 * q2, n, t) == ramanujan_sum(q1, n, t) * ramanujan_sum(q2, n, t));
    }

  for (std::int64_t q = 1; q <= 200; ++q)
    for (std::int64_t n = 1; n <= 200; ++n) {
      const std::int64_t g = gcd(q, n);
      REQUIRE(std::abs(ramanujan_sum(q, n, t)) <= g * divisor_count(g, t));
    }
}

TEST_CASE("sigma_z") {
  const auto t = build_sieve(100);
  CHECK(sigma_z(6, 0.0, t).real() == doctest::Approx(4.0));
  CHECK(sigma_z(6, 1.0, t).real() == doctest::Approx(12.0));
  CHECK(sigma_z(4, -1.0, t).real() == doctest::Approx(1.75));
  CHECK(divisor_count(360, t) == 24);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> part(-2.0, 2.0);
  for (std::int64_t n = 1; n <= 500; n += 7) {
    const Complex z(part(rng), part(rng));
    Complex brute = 0.0;
    for (std::int64_t d : divisors(n)) brute += std::exp(z * std::log(static_cast<double>(d)));
    REQUIRE(std::abs(sigma_z(n, z, t) - brute) <= 1e-10 * std::max(1.0, std::abs(brute)));
  }
}

TEST_CASE("Dirichlet series of c_q(n) at s = 2") {
  // sum_{q <= Q} c_q(n) / q^2 -> sigma_{-1}(n) / zeta(2). The error
  // oscillates, so a single doubling is not always an improvement
  // (n = 3 is a counterexample at Q = 10^4); compare Q with 8Q.
  constexpr std::int64_t kQ = 10000;
  const auto t = build_sieve(8 * kQ);
  const double zeta2 = zeta(2.0).real();
  for (std::int64_t n = 1; n <= 30; ++n) {
    const double target = sigma_z(n, -1.0, t).real() / zeta2;
    double at_q = 0.0, at_8q = 0.0;
    for (std::int64_t q = 1; q <= 8 * kQ; ++q) {
      at_8q += static_cast<double>(ramanujan_sum(q, n, t)) / static_cast<double>(q * q);
      if (q == kQ) at_q = at_8q;
    }
    const double err_q = std::abs(at_q - target);
    const double err_8q = std::abs(at_8q - target);
    CHECK(err_q < 1e-2 * sigma_z(n, 1.0, t).real());
    CHECK(err_8q < err_q);
  }
}

TEST_CASE("saw-tooth") {
  CHECK(saw_tooth(0.5) == 0.0);
  CHECK(saw_tooth(1.0) == -0.5);
  CHECK(saw_tooth(2.25) == -0.25);
  CHECK(saw_tooth(-0.25) == 0.25);
  for (double v = -5.0; v < 5.0; v += 0.037) {
    const double p = saw_tooth(v);
    REQUIRE(p >= -0.5);
    REQUIRE(p < 0.5);
  }
}
