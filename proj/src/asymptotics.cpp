#include "ramsum/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "ramsum/error.hpp"

namespace ramsum {

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::kPartI:
      return "T2_PART_I";
    case Regime::kPartII:
      return "T2_PART_II";
    case Regime::kOutside:
      return "OUTSIDE";
  }
  return "OUTSIDE";
}

RegimeTag classify_regime(double x, double y, double b) {
  RegimeTag tag{Regime::kOutside, b};
  if (!(x > std::numbers::e) || !(y > 0.0)) return tag;
  const double log_x = std::log(x);
  const double log_log_x = std::log(log_x);
  const double log_y = std::log(y);
  const double upper = 2.0 * log_x + b * log_log_x;  // ln(x^2 (ln x)^B)
  const double lower = log_x + 2.0 * b * log_log_x;  // ln(x (ln x)^{2B})
  if (log_y >= upper) {
    tag.tag = Regime::kPartI;
  } else if (log_y >= lower) {
    tag.tag = Regime::kPartII;
  }
  return tag;
}

double c1_main(double x, double y) {
  if (!(x > 0.0) || y < x) throw DomainError("first-moment main term needs 0 < x <= y");
  return y - x * x / (4.0 * kZeta2);
}

double c1_envelope(double x, double y) {
  return x * std::cbrt(y) * std::log(x) + x * x * x / y;
}

KappaProvider default_kappa_provider(const QuadratureSettings& settings) {
  return [grid = kernel_grid(settings)](double v) { return grid->evaluate(v).value; };
}

C2Prediction c2_main(double x, double y, double b, const KappaProvider& kappa_provider) {
  if (!(x > 0.0) || y < x) throw DomainError("second-moment main term needs 0 < x <= y");
  C2Prediction out;
  out.regime = classify_regime(x, y, b);
  out.u = std::log(y) - 2.0 * std::log(x);
  const double base = y * x * x / (2.0 * kZeta2);
  if (out.regime.tag == Regime::kPartI) {
    out.predicted = base;
    return out;
  }
  out.kappa = kappa_provider(-out.u);
  out.predicted = base * (1.0 + 2.0 * *out.kappa);
  return out;
}

double c2_envelope(double x, double y, Regime regime) {
  const double scale = y * x * x * std::pow(std::log(x), 10.0);
  const double second = regime == Regime::kPartI ? x * x / y : std::sqrt(x / y);
  return scale * (1.0 / std::sqrt(x) + second);
}

ComparisonReport compare(const MomentRequest& req, const SieveTables& tables,
                         const CompareOptions& options) {
  if (req.k != 1 && req.k != 2) {
    throw DomainError("no asymptotic for k=" + std::to_string(req.k));
  }
  const auto x = static_cast<double>(req.x);
  const auto y = static_cast<double>(req.y);
  ComparisonReport report;
  report.request = req;
  if (req.k == 1) {
    report.predicted = c1_main(x, y);
    report.envelope = c1_envelope(x, y);
  } else {
    if (std::abs(std::log(y / (x * x))) > kMaxAbsU) {
      throw DomainError("|ln(y/x^2)| exceeds the kappa quadrature range");
    }
    const C2Prediction p = c2_main(x, y, options.b, default_kappa_provider(options.quadrature));
    report.predicted = p.predicted;
    report.u = p.u;
    report.kappa = p.kappa;
    report.regime = p.regime;
    report.envelope = c2_envelope(x, y, p.regime.tag);
    if (p.regime.tag == Regime::kOutside) {
      report.warnings.emplace_back(
          "(x, y) outside both second-moment regimes; main term extrapolated with the kappa correction");
    }
  }
  report.exact = moment_exact(req, tables, options.sweep).exact;
  report.rel_error = std::abs(to_double(report.exact) - report.predicted) / std::abs(report.predicted);
  return report;
}

}  // namespace ramsum
