#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ramsum/zeta.hpp"

namespace ramsum {

// kappa(u) = (1/pi) * integral_0^T Re(f(it) e^{itu}) dt, i.e. the two-sided
// Fourier integral of f(it)/(2 pi) folded with f(-it) = conj(f(it)). This is
// the sign convention under which kappa(-1) = -0.0277 and the minimum sits
// near u = 1.63. The second-moment correction at (x, y) is kappa(ln(x^2/y)).

inline constexpr double kMaxAbsU = 50.0;
inline constexpr double kKappa0Cutoff = 60.0;
inline constexpr double kDefaultCutoff = 570.0;
inline constexpr double kDefaultStep = 0.005;
// Largest acceptable Richardson error estimate.
inline constexpr double kQuadratureTolerance = 1e-6;

struct QuadratureSettings {
  double t_max = kDefaultCutoff;
  // Simpson node spacing h; the error estimate also uses h/2.
  double step = kDefaultStep;
  ZetaSettings zeta;
  unsigned threads = 0;  // 0: hardware parallelism, only used to build the grid
};

QuadratureSettings kappa0_settings();

struct KappaResult {
  double u = 0.0;
  double value = 0.0;
  double quad_error = 0.0;
  double tail_bound = 0.0;
};

// (1/pi) (1 - T / sqrt(1 + T^2)): mass of |f(it)| / (2 pi) beyond |t| = T.
double tail_bound(double t_max);

// Samples of f(it) on [0, T] at spacing h/2, shared by every u.
class KernelGrid {
public:
  explicit KernelGrid(const QuadratureSettings& settings);

  const QuadratureSettings& settings() const { return settings_; }
  // Number of Simpson intervals at spacing h (even).
  std::size_t intervals() const { return intervals_; }
  double fine_spacing() const { return fine_spacing_; }
  std::span<const Complex> samples() const { return samples_; }

  KappaResult evaluate(double u) const;

  // Imaginary part of the unfolded two-sided integral, which vanishes
  // when f(-it) = conj(f(it)); samples f at negative t directly.
  double two_sided_imaginary(double u) const;

private:
  QuadratureSettings settings_;
  std::size_t intervals_ = 0;
  double fine_spacing_ = 0.0;
  std::vector<Complex> samples_;
};

// Grid for the given settings, built once per distinct settings and reused.
std::shared_ptr<const KernelGrid> kernel_grid(const QuadratureSettings& settings);

KappaResult kappa(double u, const QuadratureSettings& settings = {});
KappaResult kappa0(double u, const QuadratureSettings& settings = kappa0_settings());

// |kappa(u) - kappa(v)| <= |u - v| / 2 up to twice the combined error.
bool kappa_lipschitz_check(double u, double v, const QuadratureSettings& settings = {});

struct KappaMinimum {
  double u = 0.0;
  double value = 0.0;
  // The search converged onto an endpoint of the bracket.
  bool at_boundary = false;
  int evaluations = 0;
};

// Golden-section search on [lo, hi], assuming kappa is unimodal there.
KappaMinimum kappa_min(double lo, double hi, double tol, const QuadratureSettings& settings = {});

struct DecayRow {
  double u = 0.0;
  double value = 0.0;
  double bound = 0.0;      // 0.67 / |u|
  double reference = 0.0;  // exp(-|u|^0.55)
  double allowance = 0.0;  // tail_bound + quad_error
  // |value| <= bound + allowance; only meaningful for |u| >= 1.7.
  bool within_bound = true;
};

std::vector<DecayRow> kappa_decay_scan(std::span<const double> u_list,
                                       const QuadratureSettings& settings = {});

}  // namespace ramsum
