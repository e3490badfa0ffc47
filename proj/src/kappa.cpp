#include "ramsum/kappa.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "ramsum/error.hpp"
#include "ramsum/parallel.hpp"

namespace ramsum {

namespace {

constexpr double kMaxPhasePerStep = 0.5;

void validate(const QuadratureSettings& s) {
  if (!(s.t_max >= 1.0) || !std::isfinite(s.t_max) || s.t_max > kZetaMaxIm) {
    throw DomainError("t_max must lie in [1, 2000]");
  }
  if (!(s.step > 0.0) || s.step > 0.1) throw DomainError("step must lie in (0, 0.1]");
}

void validate_u(double u) {
  if (!std::isfinite(u) || std::abs(u) > kMaxAbsU) {
    throw DomainError("|u| must not exceed " + std::to_string(kMaxAbsU));
  }
}

// Composite Simpson over samples taken every `stride` fine nodes.
double simpson(std::span<const double> g, std::size_t stride, double spacing) {
  const std::size_t n = (g.size() - 1) / stride;
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < n; ++i) (i % 2 ? odd : even) += g[i * stride];
  return spacing / 3.0 * (g.front() + g[n * stride] + 4.0 * odd + 2.0 * even);
}

}  // namespace

QuadratureSettings kappa0_settings() {
  QuadratureSettings s;
  s.t_max = kKappa0Cutoff;
  return s;
}

double tail_bound(double t_max) {
  return (1.0 - t_max / std::sqrt(1.0 + t_max * t_max)) / std::numbers::pi;
}

KernelGrid::KernelGrid(const QuadratureSettings& settings) : settings_(settings) {
  validate(settings);
  // Round T/h up to an even interval count; h shrinks slightly to fit.
  auto n = static_cast<std::size_t>(std::ceil(settings.t_max / settings.step - 1e-9));
  if (n % 2) ++n;
  intervals_ = n;
  fine_spacing_ = settings.t_max / static_cast<double>(2 * n);
  samples_.resize(2 * n + 1);
  const unsigned threads = settings.threads ? settings.threads : default_thread_count();
  constexpr std::size_t kChunk = 512;
  const std::size_t chunks = (samples_.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::size_t end = std::min(samples_.size(), (c + 1) * kChunk);
    for (std::size_t j = c * kChunk; j < end; ++j) {
      samples_[j] = f_kernel(static_cast<double>(j) * fine_spacing_, settings_.zeta);
    }
  });
}

KappaResult KernelGrid::evaluate(double u) const {
  validate_u(u);
  // Simpson at spacing h needs a few nodes per oscillation of e^{itu}.
  if (settings_.step * std::max(1.0, std::abs(u)) > kMaxPhasePerStep) {
    throw AccuracyError("quadrature step " + std::to_string(settings_.step) +
                        " too coarse for u = " + std::to_string(u));
  }
  std::vector<double> g(samples_.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double t = static_cast<double>(j) * fine_spacing_;
    g[j] = (samples_[j] * std::polar(1.0, t * u)).real();
  }
  const double coarse = simpson(g, 2, 2.0 * fine_spacing_) / std::numbers::pi;
  const double fine = simpson(g, 1, fine_spacing_) / std::numbers::pi;
  KappaResult r;
  r.u = u;
  r.value = fine;
  r.quad_error = std::abs(fine - coarse) / 15.0;
  r.tail_bound = tail_bound(settings_.t_max);
  if (r.quad_error > kQuadratureTolerance) {
    throw AccuracyError("quadrature step too coarse for u = " + std::to_string(u) +
                        " (error estimate " + std::to_string(r.quad_error) + ")");
  }
  return r;
}

double KernelGrid::two_sided_imaginary(double u) const {
  validate_u(u);
  std::vector<double> g(samples_.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double t = static_cast<double>(j) * fine_spacing_;
    const Complex mirrored = j == 0 ? samples_[0] : f_kernel(-t, settings_.zeta);
    g[j] = (samples_[j] * std::polar(1.0, t * u) + mirrored * std::polar(1.0, -t * u)).imag();
  }
  return simpson(g, 1, fine_spacing_) / (2.0 * std::numbers::pi);
}

std::shared_ptr<const KernelGrid> kernel_grid(const QuadratureSettings& settings) {
  using Key = std::tuple<double, double, std::int64_t, int, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const KernelGrid>> cache;
  const Key key{settings.t_max, settings.step, settings.zeta.min_terms,
                settings.zeta.bernoulli_order, settings.zeta.near_zero};
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_shared<const KernelGrid>(settings);
  return slot;
}

KappaResult kappa(double u, const QuadratureSettings& settings) {
  validate_u(u);
  return kernel_grid(settings)->evaluate(u);
}

KappaResult kappa0(double u, const QuadratureSettings& settings) {
  QuadratureSettings s = settings;
  s.t_max = kKappa0Cutoff;
  return kappa(u, s);
}

bool kappa_lipschitz_check(double u, double v, const QuadratureSettings& settings) {
  const KappaResult a = kappa(u, settings);
  const KappaResult b = kappa(v, settings);
  const double slack = a.quad_error + a.tail_bound + b.quad_error + b.tail_bound;
  return std::abs(a.value - b.value) <= std::abs(u - v) / 2.0 + slack;
}

KappaMinimum kappa_min(double lo, double hi, double tol, const QuadratureSettings& settings) {
  if (!(lo < hi)) throw DomainError("kappa_min needs lo < hi");
  if (!(tol > 0.0)) throw DomainError("kappa_min needs tol > 0");
  const auto grid = kernel_grid(settings);
  KappaMinimum out;
  auto eval = [&](double u) {
    ++out.evaluations;
    return grid->evaluate(u).value;
  };
  if (hi - lo <= tol) {
    out.u = 0.5 * (lo + hi);
    out.value = eval(out.u);
    return out;
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  out.u = 0.5 * (a + b);
  out.value = eval(out.u);
  out.at_boundary = (out.u - lo) <= tol || (hi - out.u) <= tol;
  return out;
}

std::vector<DecayRow> kappa_decay_scan(std::span<const double> u_list,
                                       const QuadratureSettings& settings) {
  const auto grid = kernel_grid(settings);
  std::vector<DecayRow> rows;
  rows.reserve(u_list.size());
  for (double u : u_list) {
    const KappaResult r = grid->evaluate(u);
    DecayRow row;
    row.u = u;
    row.value = r.value;
    row.allowance = r.tail_bound + r.quad_error;
    row.reference = std::exp(-std::pow(std::abs(u), 0.55));
    row.bound = u == 0.0 ? INFINITY : 0.67 / std::abs(u);
    row.within_bound = std::abs(u) < 1.7 || std::abs(r.value) <= row.bound + row.allowance;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ramsum
