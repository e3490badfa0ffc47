#include "ramsum/arith.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ramsum/error.hpp"

namespace ramsum {

SieveTables::SieveTables(std::int64_t limit) : limit_(limit) {
  if (limit < 1 || limit >= kSieveCap) {
    throw CapacityError("sieve limit " + std::to_string(limit) +
                        " outside [1, " + std::to_string(kSieveCap) + ")");
  }
  const auto n = static_cast<std::size_t>(limit);
  mobius_.assign(n + 1, 0);
  mertens_.assign(n + 1, 0);
  spf_.assign(n + 1, 0);

  std::vector<std::uint32_t> primes;
  mobius_[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      mobius_[i] = -1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (p > spf_[i] || m > n) break;
      spf_[m] = p;
      mobius_[m] = (p == spf_[i]) ? 0 : static_cast<std::int8_t>(-mobius_[i]);
    }
  }
  for (std::size_t i = 1; i <= n; ++i) mertens_[i] = mertens_[i - 1] + mobius_[i];
}

void SieveTables::check(std::int64_t n, std::int64_t lo) const {
  if (n < lo || n > limit_) {
    throw RangeError("argument " + std::to_string(n) + " outside sieve range [" +
                     std::to_string(lo) + ", " + std::to_string(limit_) + "]");
  }
}

int SieveTables::mobius(std::int64_t n) const {
  check(n, 1);
  return mobius_[static_cast<std::size_t>(n)];
}

std::int64_t SieveTables::mertens(std::int64_t x) const {
  check(x, 0);
  return mertens_[static_cast<std::size_t>(x)];
}

std::int64_t SieveTables::spf(std::int64_t n) const {
  check(n, 2);
  return spf_[static_cast<std::size_t>(n)];
}

SieveTables build_sieve(std::int64_t limit) { return SieveTables(limit); }

std::int64_t mertens(std::int64_t x, const SieveTables& tables) { return tables.mertens(x); }

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::vector<PrimePower> factorize(std::int64_t n, const SieveTables& tables) {
  if (n < 1) throw RangeError("cannot factor " + std::to_string(n));
  std::vector<PrimePower> out;
  auto push = [&out](std::int64_t p) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  };
  // Trial division until the cofactor drops into the table.
  for (std::int64_t p = 2; n > tables.limit() && p * p <= n; ++p) {
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > tables.limit()) {
    push(n);  // remaining cofactor is prime
    return out;
  }
  while (n > 1) {
    const std::int64_t p = tables.spf(n);
    push(p);
    n /= p;
  }
  return out;
}

std::int64_t totient(std::int64_t n, const SieveTables& tables) {
  tables.mobius(n);  // range check
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n, tables)) phi = phi / p * (p - 1);
  return phi;
}

std::int64_t ramanujan_sum_divisor(std::int64_t q, std::int64_t n,
                                   const SieveTables& tables) {
  tables.mobius(q);
  if (n < 1) throw RangeError("n must be positive");
  const std::int64_t g = gcd(q, n);
  std::int64_t sum = 0;
  for (std::int64_t d = 1; d * d <= g; ++d) {
    if (g % d != 0) continue;
    sum += d * tables.mobius(q / d);
    const std::int64_t e = g / d;
    if (e != d) sum += e * tables.mobius(q / e);
  }
  return sum;
}

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n, const SieveTables& tables) {
  tables.mobius(q);
  if (n < 1) throw RangeError("n must be positive");
  const std::int64_t g = gcd(q, n);
  const int mu = tables.mobius(q / g);
  if (mu == 0) return 0;
  return mu * (totient(q, tables) / totient(q / g, tables));
}

Complex ramanujan_sum_exponential(std::int64_t q, std::int64_t n) {
  if (q < 1 || q > kExponentialSumCap) {
    throw CapacityError("exponential-sum form needs 1 <= q <= " +
                        std::to_string(kExponentialSumCap));
  }
  if (n < 1) throw RangeError("n must be positive");
  // Kahan summation on each component.
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
  auto add = [](double& s, double& c, double v) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  };
  const std::int64_t r = n % q;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (gcd(a, q) != 1) continue;
    // Reduce a*n mod q before scaling so the angle stays in [0, 2 pi).
    const auto k = static_cast<double>((static_cast<__int128>(a) * r) % q);
    const double angle = 2.0 * std::numbers::pi * k / static_cast<double>(q);
    add(re, re_c, std::cos(angle));
    add(im, im_c, -std::sin(angle));
  }
  return {re, im};
}

Complex sigma_z(std::int64_t n, Complex z, const SieveTables& tables) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("sigma_z exponent must be finite");
  }
  // Multiplicative: product over p^e of (1 + p^z + ... + p^{ez}).
  Complex result = 1.0;
  for (const auto& [p, e] : factorize(n, tables)) {
    const Complex pz = std::exp(z * std::log(static_cast<double>(p)));
    Complex term = 1.0, local = 1.0;
    for (int i = 0; i < e; ++i) {
      term *= pz;
      local += term;
    }
    result *= local;
  }
  return result;
}

std::int64_t divisor_count(std::int64_t n, const SieveTables& tables) {
  std::int64_t count = 1;
  for (const auto& pp : factorize(n, tables)) count *= pp.exponent + 1;
  return count;
}

double saw_tooth(double t) { return t - std::floor(t) - 0.5; }

}  // namespace ramsum
