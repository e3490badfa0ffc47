#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ramsum/zeta.hpp"

namespace ramsum {

struct SeriesRow {
  std::int64_t cutoff = 0;
  double partial = 0.0;
  double target = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
};

// Cutoffs first, 2 first, 4 first, ... (count entries).
std::vector<std::int64_t> doubling_cutoffs(std::int64_t first, int count);

// sum_{q <= Q} c_q(n) / q^s against sigma_{1-s}(n) / zeta(s), real s > 1.
std::vector<SeriesRow> ramanujan_dirichlet_series(std::int64_t n, double s,
                                                  std::span<const std::int64_t> cutoffs);

// sum_{n <= Q} sigma_a(n) sigma_b(n) / n^s against
// zeta(s) zeta(s-a) zeta(s-b) zeta(s-a-b) / zeta(2s-a-b).
std::vector<SeriesRow> divisor_product_series(double s, double a, double b,
                                              std::span<const std::int64_t> cutoffs);

}  // namespace ramsum
