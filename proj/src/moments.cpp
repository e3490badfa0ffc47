#include "ramsum/moments.hpp"

#include <algorithm>
#include <cmath>
#include <chrono>
#include <string>

#include "ramsum/error.hpp"
#include "ramsum/parallel.hpp"

namespace ramsum {

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw RangeError(std::string(name) + " must be >= 1");
}

// Neumaier-compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

std::int64_t s_partial(std::int64_t x, std::int64_t n, const SieveTables& tables) {
  require_positive(x, "x");
  require_positive(n, "n");
  tables.mertens(x);
  std::int64_t s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d <= x) s += d * tables.mertens(x / d);
    const std::int64_t e = n / d;
    if (e != d && e <= x) s += e * tables.mertens(x / e);
  }
  return s;
}

PartialSumSieve::PartialSumSieve(std::int64_t x, const SieveTables& tables) : x_(x) {
  require_positive(x, "x");
  tables.mertens(x);
  weight_.resize(static_cast<std::size_t>(x) + 1);
  for (std::int64_t d = 1; d <= x; ++d) weight_[d] = d * tables.mertens(x / d);
}

void PartialSumSieve::fill(std::int64_t n_lo, std::span<std::int64_t> out) const {
  require_positive(n_lo, "n_lo");
  if (static_cast<std::int64_t>(out.size()) > kMaxBlockSize) {
    throw CapacityError("block of " + std::to_string(out.size()) + " exceeds cap " +
                        std::to_string(kMaxBlockSize));
  }
  std::fill(out.begin(), out.end(), 0);
  const auto len = static_cast<std::int64_t>(out.size());
  const std::int64_t n_hi = n_lo + len - 1;
  const std::int64_t d_max = std::min(x_, n_hi);
  for (std::int64_t d = 1; d <= d_max; ++d) {
    const std::int64_t w = weight_[d];
    if (w == 0) continue;
    const std::int64_t first = (n_lo + d - 1) / d * d;
    for (std::int64_t m = first - n_lo; m < len; m += d) out[m] += w;
  }
}

std::vector<std::int64_t> s_partial_block(std::int64_t x, std::int64_t n_lo, std::int64_t n_hi,
                                          const SieveTables& tables) {
  require_positive(n_lo, "n_lo");
  if (n_hi < n_lo) throw RangeError("empty block: n_hi < n_lo");
  if (n_hi - n_lo + 1 > kMaxBlockSize) {
    throw CapacityError("block length exceeds cap " + std::to_string(kMaxBlockSize));
  }
  PartialSumSieve sieve(x, tables);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_hi - n_lo + 1));
  sieve.fill(n_lo, out);
  return out;
}

MomentResult moment_exact(const MomentRequest& req, const SieveTables& tables,
                          const SweepOptions& options) {
  require_positive(req.x, "x");
  require_positive(req.y, "y");
  if (req.k < 1) throw RangeError("k must be >= 1");
  if (options.block_size < 1 || options.block_size > kMaxBlockSize) {
    throw CapacityError("block size must lie in [1, " + std::to_string(kMaxBlockSize) + "]");
  }
  const auto start = std::chrono::steady_clock::now();

  const PartialSumSieve sieve(req.x, tables);
  const std::int64_t block = options.block_size;
  const auto blocks = static_cast<std::size_t>((req.y + block - 1) / block);
  std::vector<WideInt> partial(blocks, 0);

  parallel_for(blocks, options.threads, [&](std::size_t b) {
    const std::int64_t lo = 1 + static_cast<std::int64_t>(b) * block;
    const std::int64_t hi = std::min(req.y, lo + block - 1);
    std::vector<std::int64_t> values(static_cast<std::size_t>(hi - lo + 1));
    sieve.fill(lo, values);
    WideInt acc = 0;
    for (std::int64_t s : values) acc = checked_add(acc, checked_pow(s, static_cast<unsigned>(req.k)));
    partial[b] = acc;
  });

  MomentResult result{req, 0, 0.0};
  for (WideInt p : partial) result.exact = checked_add(result.exact, p);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

WideInt c1_divisor_form(std::int64_t x, std::int64_t y, const SieveTables& tables) {
  require_positive(x, "x");
  require_positive(y, "y");
  tables.mertens(x);
  WideInt total = 0;
  for (std::int64_t d = 1; d <= x; ++d) {
    const WideInt count = y / d;
    for (std::int64_t k = 1; k * d <= x; ++k) {
      const int mu = tables.mobius(k);
      if (mu != 0) total = checked_add(total, checked_mul(WideInt{d} * mu, count));
    }
  }
  return total;
}

C1Decomposition c1_decomposition(std::int64_t x, std::int64_t y, const SieveTables& tables) {
  require_positive(x, "x");
  require_positive(y, "y");
  tables.mertens(x);
  // Pairs (d, k) with dk <= x grouped by d: sum_k mu(k) = M(x / d).
  WideInt mobius_pairs = 0;
  C1Decomposition out;
  CompensatedSum c13;
  const double yd = static_cast<double>(y);
  for (std::int64_t d = 1; d <= x; ++d) {
    const std::int64_t m = tables.mertens(x / d);
    if (m == 0) continue;
    mobius_pairs = checked_add(mobius_pairs, m);
    out.c12_twice = checked_add(out.c12_twice, WideInt{d} * m);
    c13.add(static_cast<double>(d * m) * saw_tooth(yd / static_cast<double>(d)));
  }
  out.c11 = checked_mul(y, mobius_pairs);
  out.c13 = c13.value();
  return out;
}

double psi_sum(double y, std::int64_t d_lo, std::int64_t d_hi) {
  require_positive(d_lo, "d_lo");
  if (d_hi < d_lo) throw RangeError("d_hi < d_lo");
  CompensatedSum sum;
  for (std::int64_t d = d_lo; d <= d_hi; ++d) sum.add(saw_tooth(y / static_cast<double>(d)));
  return sum.value();
}

}  // namespace ramsum
