#pragma once

#include <complex>
#include <cstdint>

namespace ramsum {

using Complex = std::complex<double>;

// Envelope in which zeta() is validated to 1e-10 absolute.
inline constexpr double kZetaMinRe = 0.4;
inline constexpr double kZetaMaxRe = 16.0;
inline constexpr double kZetaMaxIm = 2000.0;

struct ZetaSettings {
  // Lower bound on the Euler-Maclaurin cutoff N; the effective cutoff is
  // max(min_terms, ceil(2|Im s| + 10)).
  std::int64_t min_terms = 16;
  // Number of Bernoulli correction terms, B_2 .. B_{2K}.
  int bernoulli_order = 12;
  // |t| below which f(it) switches to the Stieltjes-series form.
  double near_zero = 1e-2;
};

std::int64_t zeta_cutoff(Complex s, const ZetaSettings& settings);

// Riemann zeta by Euler-Maclaurin summation. Throws PoleError at s = 1 and
// DomainError outside the envelope or for invalid settings.
Complex zeta(Complex s, const ZetaSettings& settings = {});

// f(it) where f(s) = zeta(1 - s) / zeta(1 + s) / ((1 + s)^2 (1 - s)).
// Dispatches on |t| < settings.near_zero; |t| <= kZetaMaxIm.
Complex f_kernel(double t, const ZetaSettings& settings = {});

// The two evaluation paths of f_kernel, exposed for cross-checking.
Complex f_kernel_direct(double t, const ZetaSettings& settings = {});
Complex f_kernel_series(double t);

}  // namespace ramsum
