#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsum {

using Complex = std::complex<double>;

// Sieve limits at or above this many entries are refused.
inline constexpr std::int64_t kSieveCap = 1'000'000'000;

// Largest modulus accepted by the O(q) exponential-sum form.
inline constexpr std::int64_t kExponentialSumCap = 1'000'000;

// Möbius, Mertens and smallest-prime-factor tables over [1, limit],
// filled by one linear sieve. Immutable once built.
class SieveTables {
public:
  explicit SieveTables(std::int64_t limit);

  std::int64_t limit() const { return limit_; }

  // mu(n) for 1 <= n <= limit.
  int mobius(std::int64_t n) const;
  // Sum of mu(k) for k <= x, 0 <= x <= limit.
  std::int64_t mertens(std::int64_t x) const;
  // Smallest prime factor of n, 2 <= n <= limit.
  std::int64_t spf(std::int64_t n) const;

  // Raw views, index = argument (index 0 of mobius is unused and 0).
  std::span<const std::int8_t> mobius_table() const { return mobius_; }
  std::span<const std::int32_t> mertens_table() const { return mertens_; }

private:
  void check(std::int64_t n, std::int64_t lo) const;

  std::int64_t limit_;
  std::vector<std::int8_t> mobius_;
  std::vector<std::int32_t> mertens_;
  std::vector<std::uint32_t> spf_;
};

SieveTables build_sieve(std::int64_t limit);

std::int64_t mertens(std::int64_t x, const SieveTables& tables);

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Prime factorization as (prime, exponent) pairs, ascending. Uses the spf
// table when n <= limit and trial division otherwise.
struct PrimePower {
  std::int64_t prime;
  int exponent;
};
std::vector<PrimePower> factorize(std::int64_t n, const SieveTables& tables);

std::int64_t totient(std::int64_t n, const SieveTables& tables);

// c_q(n) as the divisor sum over d | gcd(q, n) of d * mu(q / d). This is the
// defining form and the oracle for the closed form below.
std::int64_t ramanujan_sum_divisor(std::int64_t q, std::int64_t n,
                                   const SieveTables& tables);

// Hölder's closed form mu(q/g) phi(q) / phi(q/g), g = gcd(q, n).
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n,
                           const SieveTables& tables);

// Sum over 1 <= a <= q, gcd(a, q) = 1 of exp(-2 pi i a n / q), compensated.
Complex ramanujan_sum_exponential(std::int64_t q, std::int64_t n);

// sigma_z(n) = sum over d | n of d^z.
Complex sigma_z(std::int64_t n, Complex z, const SieveTables& tables);

// Number of divisors; exact integer companion of sigma_z(n, 0).
std::int64_t divisor_count(std::int64_t n, const SieveTables& tables);

// psi(t) = t - floor(t) - 1/2.
double saw_tooth(double t);

}  // namespace ramsum
