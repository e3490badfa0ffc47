#include "ramsum/series.hpp"

#include <algorithm>
#include <cmath>

#include "ramsum/arith.hpp"
#include "ramsum/error.hpp"

namespace ramsum {

namespace {

void check_cutoffs(std::span<const std::int64_t> cutoffs) {
  if (cutoffs.empty()) throw RangeError("no cutoffs given");
  if (!std::is_sorted(cutoffs.begin(), cutoffs.end()) || cutoffs.front() < 1) {
    throw RangeError("cutoffs must be positive and ascending");
  }
}

// Walks 1..max(cutoffs) once, recording the running sum at each cutoff.
template <typename Term>
std::vector<SeriesRow> tabulate(std::span<const std::int64_t> cutoffs, double target, Term term) {
  std::vector<SeriesRow> rows;
  double sum = 0.0, carry = 0.0;
  std::int64_t m = 0;
  for (std::int64_t cutoff : cutoffs) {
    for (++m; m <= cutoff; ++m) {
      const double v = term(m);
      const double t = sum + v;
      carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
      sum = t;
    }
    --m;
    SeriesRow row;
    row.cutoff = cutoff;
    row.partial = sum + carry;
    row.target = target;
    row.abs_error = std::abs(row.partial - target);
    row.rel_error = row.abs_error / std::abs(target);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<std::int64_t> doubling_cutoffs(std::int64_t first, int count) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(first << i);
  return out;
}

std::vector<SeriesRow> ramanujan_dirichlet_series(std::int64_t n, double s,
                                                  std::span<const std::int64_t> cutoffs) {
  check_cutoffs(cutoffs);
  if (!(s > 1.0)) throw DomainError("Dirichlet series of c_q(n) needs s > 1");
  if (n < 1) throw RangeError("n must be positive");
  const SieveTables tables(cutoffs.back());
  const double target = (sigma_z(n, Complex(1.0 - s, 0.0), tables) / zeta(Complex(s, 0.0))).real();
  return tabulate(cutoffs, target, [&](std::int64_t q) {
    return static_cast<double>(ramanujan_sum(q, n, tables)) * std::pow(static_cast<double>(q), -s);
  });
}

std::vector<SeriesRow> divisor_product_series(double s, double a, double b,
                                              std::span<const std::int64_t> cutoffs) {
  check_cutoffs(cutoffs);
  if (!(s > std::max({1.0, 1.0 + a, 1.0 + b, 1.0 + a + b}))) {
    throw DomainError("divisor product series diverges for these exponents");
  }
  const SieveTables tables(cutoffs.back());
  auto z = [](double v) { return zeta(Complex(v, 0.0)).real(); };
  const double target = z(s) * z(s - a) * z(s - b) * z(s - a - b) / z(2.0 * s - a - b);
  return tabulate(cutoffs, target, [&](std::int64_t n) {
    const double sa = sigma_z(n, Complex(a, 0.0), tables).real();
    const double sb = sigma_z(n, Complex(b, 0.0), tables).real();
    return sa * sb * std::pow(static_cast<double>(n), -s);
  });
}

}  // namespace ramsum
