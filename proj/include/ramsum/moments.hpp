#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ramsum/arith.hpp"
#include "ramsum/wide_int.hpp"

namespace ramsum {

// Thresholds are inclusive integers: q <= x, n <= y.
struct MomentRequest {
  std::int64_t x = 1;
  std::int64_t y = 1;
  int k = 1;
};

struct MomentResult {
  MomentRequest request;
  WideInt exact = 0;
  double elapsed_seconds = 0.0;
};

inline constexpr std::int64_t kDefaultBlockSize = std::int64_t{1} << 20;
inline constexpr std::int64_t kMaxBlockSize = std::int64_t{1} << 26;

struct SweepOptions {
  std::int64_t block_size = kDefaultBlockSize;
  unsigned threads = 1;
};

// S(x, n) = sum_{q <= x} c_q(n) = sum_{d | n, d <= x} d * M(x / d).
std::int64_t s_partial(std::int64_t x, std::int64_t n, const SieveTables& tables);

// Sieve for S(x, n) over consecutive n. Holds the weights d * M(x / d),
// d = 1..x, computed once; each block adds weight d to every multiple of d.
class PartialSumSieve {
public:
  PartialSumSieve(std::int64_t x, const SieveTables& tables);

  std::int64_t x() const { return x_; }

  // out[i] = S(x, n_lo + i); out.size() fixes the block length.
  void fill(std::int64_t n_lo, std::span<std::int64_t> out) const;

private:
  std::int64_t x_;
  std::vector<std::int64_t> weight_;  // index d, weight_[0] unused
};

std::vector<std::int64_t> s_partial_block(std::int64_t x, std::int64_t n_lo,
                                          std::int64_t n_hi, const SieveTables& tables);

// Exact C_k(x, y) = sum_{n <= y} S(x, n)^k. Blocks of n are swept in
// parallel; each block sum and the final reduction are checked 128-bit.
MomentResult moment_exact(const MomentRequest& req, const SieveTables& tables,
                          const SweepOptions& options = {});

// The k = 1 identity sum_{dk <= x} d mu(k) floor(y / d), summed over pairs.
WideInt c1_divisor_form(std::int64_t x, std::int64_t y, const SieveTables& tables);

// C_1 = C11 - C12 - C13 with
//   C11 = y * sum_{dk <= x} mu(k)        (exact)
//   C12 = (1/2) * sum_{dk <= x} d mu(k)  (exact, kept as twice its value)
//   C13 = sum_{dk <= x} d mu(k) psi(y/d) (floating)
struct C1Decomposition {
  WideInt c11 = 0;
  WideInt c12_twice = 0;
  double c13 = 0.0;

  double c12() const { return to_double(c12_twice) / 2.0; }
  double total() const { return to_double(c11) - c12() - c13; }
};

C1Decomposition c1_decomposition(std::int64_t x, std::int64_t y, const SieveTables& tables);

// sum_{d = d_lo}^{d_hi} psi(y / d).
double psi_sum(double y, std::int64_t d_lo, std::int64_t d_hi);

}  // namespace ramsum
