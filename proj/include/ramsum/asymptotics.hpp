#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsum/arith.hpp"
#include "ramsum/kappa.hpp"
#include "ramsum/moments.hpp"

namespace ramsum {

// Natural logarithms throughout.

inline constexpr double kDefaultB = 10.5;

enum class Regime { kPartI, kPartII, kOutside };

std::string to_string(Regime r);

struct RegimeTag {
  Regime tag = Regime::kOutside;
  double b_param = kDefaultB;
};

// kPartI iff y >= x^2 (ln x)^B; kPartII iff x (ln x)^{2B} <= y <= x^2 (ln x)^B.
// Thresholds are compared in log space. x < e (ln ln x undefined or
// negative) is always kOutside.
RegimeTag classify_regime(double x, double y, double b = kDefaultB);

// y - x^2 / (4 zeta(2)). Throws DomainError when y < x.
double c1_main(double x, double y);

// x y^{1/3} ln x + x^3 / y, implied constant 1.
double c1_envelope(double x, double y);

// Maps an argument v to kappa(v).
using KappaProvider = std::function<double(double)>;

KappaProvider default_kappa_provider(const QuadratureSettings& settings = {});

struct C2Prediction {
  double predicted = 0.0;
  RegimeTag regime;
  double u = 0.0;               // ln(y / x^2)
  std::optional<double> kappa;  // correction used, kappa(-u); empty in part (i)
};

// Part (i): y x^2 / (2 zeta(2)). Otherwise y x^2 / (2 zeta(2)) (1 + 2 kappa(-u)).
C2Prediction c2_main(double x, double y, double b, const KappaProvider& kappa_provider);

// yx^2 (ln x)^10 (x^{-1/2} + x^2/y) in part (i),
// yx^2 (ln x)^10 (x^{-1/2} + (y/x)^{-1/2}) otherwise. Constant 1.
double c2_envelope(double x, double y, Regime regime);

struct ComparisonReport {
  MomentRequest request;
  WideInt exact = 0;
  double predicted = 0.0;
  std::optional<double> u;
  std::optional<double> kappa;
  std::optional<RegimeTag> regime;
  double rel_error = 0.0;
  double envelope = 0.0;
  std::vector<std::string> warnings;
};

struct CompareOptions {
  double b = kDefaultB;
  QuadratureSettings quadrature;
  SweepOptions sweep;
};

// Exact moment next to the matching main term; k must be 1 or 2.
ComparisonReport compare(const MomentRequest& req, const SieveTables& tables,
                         const CompareOptions& options = {});

}  // namespace ramsum
