#include "ramsum/zeta.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ramsum/error.hpp"

namespace ramsum {

namespace {

struct Rational {
  double num;
  double den;
};

// B_2, B_4, ..., B_24.
constexpr std::array<Rational, 12> kBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
}};

// B_{2j} / (2j)!, j = 1..12.
constexpr std::array<double, 12> bernoulli_over_factorial() {
  std::array<double, 12> out{};
  double factorial = 1.0;
  for (int j = 1; j <= 12; ++j) {
    factorial *= (2.0 * j - 1.0) * (2.0 * j);
    out[j - 1] = kBernoulli[j - 1].num / kBernoulli[j - 1].den / factorial;
  }
  return out;
}

constexpr std::array<double, 12> kBernoulliCoeff = bernoulli_over_factorial();

// Stieltjes constants gamma_0 .. gamma_3.
constexpr double kGamma0 = 0.57721566490153286;
constexpr double kGamma1 = -0.07281584548367673;
constexpr double kGamma2 = -0.00969036319287232;
constexpr double kGamma3 = 0.00205383442030335;

void require_finite(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("non-finite zeta argument");
  }
}

// ln n for every n the cutoff policy can reach.
const std::vector<double>& log_table() {
  static const std::vector<double> table = [] {
    const auto size = static_cast<std::size_t>(2.0 * kZetaMaxIm + 12.0);
    std::vector<double> out(size, 0.0);
    for (std::size_t n = 1; n < size; ++n) out[n] = std::log(static_cast<double>(n));
    return out;
  }();
  return table;
}

// n^{-s} = exp(-sigma ln n) * exp(-i t ln n).
Complex inverse_power(double log_n, Complex s) {
  return std::polar(std::exp(-s.real() * log_n), -s.imag() * log_n);
}

// s zeta(1 + s) = 1 + g0 s - g1 s^2 + g2/2 s^3 - g3/6 s^4 + O(s^5).
Complex pole_free(Complex s) {
  return 1.0 + s * (kGamma0 + s * (-kGamma1 + s * (kGamma2 / 2.0 + s * (-kGamma3 / 6.0))));
}

}  // namespace

std::int64_t zeta_cutoff(Complex s, const ZetaSettings& settings) {
  const auto policy = static_cast<std::int64_t>(std::ceil(2.0 * std::abs(s.imag()) + 10.0));
  return std::max(settings.min_terms, policy);
}

Complex zeta(Complex s, const ZetaSettings& settings) {
  require_finite(s);
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  if (s.real() < kZetaMinRe || s.real() > kZetaMaxRe || std::abs(s.imag()) > kZetaMaxIm) {
    throw DomainError("zeta argument outside envelope: " + std::to_string(s.real()) + " + " +
                      std::to_string(s.imag()) + "i");
  }
  if (settings.bernoulli_order < 1 || settings.bernoulli_order > 12 || settings.min_terms < 1) {
    throw DomainError("invalid zeta settings");
  }

  const std::int64_t n_cut = zeta_cutoff(s, settings);
  const auto& logs = log_table();
  Complex head = 0.0;
  for (std::int64_t n = n_cut - 1; n >= 1; --n) {
    const double log_n = static_cast<std::size_t>(n) < logs.size()
                             ? logs[static_cast<std::size_t>(n)]
                             : std::log(static_cast<double>(n));
    head += inverse_power(log_n, s);
  }

  const double big_n = static_cast<double>(n_cut);
  const double log_n = std::log(big_n);
  const Complex n_pow = inverse_power(log_n, s);  // N^{-s}
  Complex result = head + big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

  // Terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
  Complex rising = s;
  Complex power = n_pow / big_n;
  const double inv_n2 = 1.0 / (big_n * big_n);
  for (int j = 1; j <= settings.bernoulli_order; ++j) {
    result += kBernoulliCoeff[j - 1] * rising * power;
    rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    power *= inv_n2;
  }
  return result;
}

Complex f_kernel_direct(double t, const ZetaSettings& settings) {
  if (t == 0.0) throw PoleError("direct kernel path is singular at t = 0");
  const Complex s(0.0, t);
  return zeta(1.0 - s, settings) / zeta(1.0 + s, settings) / ((1.0 + s) * (1.0 + s) * (1.0 - s));
}

Complex f_kernel_series(double t) {
  const Complex s(0.0, t);
  return -pole_free(-s) / (pole_free(s) * (1.0 + s) * (1.0 + s) * (1.0 - s));
}

Complex f_kernel(double t, const ZetaSettings& settings) {
  if (!std::isfinite(t) || std::abs(t) > kZetaMaxIm) {
    throw DomainError("kernel argument outside |t| <= 2000");
  }
  if (std::abs(t) < settings.near_zero) return f_kernel_series(t);
  return f_kernel_direct(t, settings);
}

}  // namespace ramsum
