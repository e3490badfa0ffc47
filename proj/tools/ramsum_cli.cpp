// ramsum: exact Ramanujan-sum moments, their asymptotic main terms and the
// Fourier integral kappa(u) from the second-moment correction.
//
// Exit codes: 0 success, 1 compute error, 2 usage error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsum/arith.hpp"
#include "ramsum/asymptotics.hpp"
#include "ramsum/error.hpp"
#include "ramsum/kappa.hpp"
#include "ramsum/moments.hpp"
#include "ramsum/parallel.hpp"
#include "ramsum/series.hpp"
#include "report.hpp"

namespace {

using ramsum::cli::Cell;
using ramsum::cli::Report;

constexpr double kBudgetX = 1e6;
constexpr double kBudgetY = 1e9;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double x = 0.0, y = 0.0;
  int k = 1;
  double u = 0.0;
  double b = ramsum::kDefaultB;
  double t_max = ramsum::kDefaultCutoff;
  double quad_step = ramsum::kDefaultStep;
  bool truncated = false;
  unsigned threads = ramsum::default_thread_count();
  std::int64_t block_size = ramsum::kDefaultBlockSize;
  std::string format = "csv";
  std::string output;
  bool force = false;
  bool timings = false;
  bool quiet = false;

  // kappa-table
  double from = -1.7, to = 1.7, grid_step = 0.1;
  std::vector<double> u_list;
  bool decay = false;
  // kappa-min
  double lo = 0.5, hi = 3.0, tol = 1e-3;
  // series-check
  std::string which = "eq1";
  std::int64_t n = 1;
  double s = 0.0;
  double a = 0.0, b_exp = 0.0;
  std::int64_t first = 100;
  int count = 8;
};

void progress(const RunConfig& cfg, const std::string& msg) {
  if (!cfg.quiet) std::cerr << "ramsum: " << msg << "\n";
}

std::int64_t as_count(double v, const char* name) {
  if (!std::isfinite(v) || v < 1.0 || v != std::floor(v) || v > 9e15) {
    throw UsageError(std::string("--") + name + " must be a positive integer");
  }
  return static_cast<std::int64_t>(v);
}

void check_budget(const RunConfig& cfg, std::int64_t x, std::int64_t y) {
  if (cfg.force) return;
  if (static_cast<double>(x) > kBudgetX || static_cast<double>(y) > kBudgetY) {
    throw ramsum::CapacityError("x <= 1e6 and y <= 1e9 by default; pass --force to exceed");
  }
}

ramsum::QuadratureSettings quadrature(const RunConfig& cfg) {
  ramsum::QuadratureSettings q;
  q.t_max = cfg.truncated ? ramsum::kKappa0Cutoff : cfg.t_max;
  q.step = cfg.quad_step;
  q.threads = cfg.threads;
  return q;
}

ramsum::SweepOptions sweep(const RunConfig& cfg) { return {cfg.block_size, cfg.threads}; }

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", cfg.output, "Write to this file instead of standard output");
  sub->add_flag("--timings", cfg.timings, "Record elapsed times in JSON output");
  sub->add_flag("-q,--quiet", cfg.quiet, "No progress messages on standard error");
}

void add_sweep(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--block-size", cfg.block_size, "Values of n per sieve block")
      ->check(CLI::Range(std::int64_t{1}, ramsum::kMaxBlockSize));
  sub->add_flag("--force", cfg.force, "Lift the default x <= 1e6, y <= 1e9 budget");
}

void add_quadrature(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--t-max", cfg.t_max, "Truncation T of the kappa integral");
  sub->add_option("--quad-step", cfg.quad_step, "Simpson node spacing");
  sub->add_option("--threads", cfg.threads, "Worker threads for the kernel grid")->check(CLI::PositiveNumber);
}

void add_xy(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--x", cfg.x, "Modulus threshold (q <= x)")->required();
  sub->add_option("--y", cfg.y, "Range threshold (n <= y)")->required();
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- subcommands ------------------------------------------------------------

Report run_exact(const RunConfig& cfg) {
  const std::int64_t x = as_count(cfg.x, "x"), y = as_count(cfg.y, "y");
  if (cfg.k < 1) throw UsageError("--k must be >= 1");
  check_budget(cfg, x, y);
  Report r;
  r.command = "exact";
  r.inputs = {{"x", x}, {"y", y}, {"k", cfg.k}};
  if (y < x) r.warnings.emplace_back("y < x: the main terms assume y >= x");
  progress(cfg, "sieving S(x, n) for n <= " + std::to_string(y));
  const auto tables = ramsum::build_sieve(x);
  const auto result = ramsum::moment_exact({x, y, cfg.k}, tables, sweep(cfg));
  r.header = {"x", "y", "k", "exact"};
  r.rows.push_back({x, y, std::int64_t{cfg.k}, result.exact});
  if (cfg.timings) r.timings["moment_seconds"] = result.elapsed_seconds;
  return r;
}

Report run_c1_divisor(const RunConfig& cfg) {
  const std::int64_t x = as_count(cfg.x, "x"), y = as_count(cfg.y, "y");
  check_budget(cfg, x, y);
  const auto start = std::chrono::steady_clock::now();
  const auto tables = ramsum::build_sieve(x);
  Report r;
  r.command = "c1-divisor";
  r.inputs = {{"x", x}, {"y", y}};
  r.header = {"x", "y", "c1"};
  r.rows.push_back({x, y, ramsum::c1_divisor_form(x, y, tables)});
  if (cfg.timings) r.timings["total_seconds"] = elapsed_since(start);
  return r;
}

Report run_c1_decompose(const RunConfig& cfg) {
  const std::int64_t x = as_count(cfg.x, "x"), y = as_count(cfg.y, "y");
  check_budget(cfg, x, y);
  const auto start = std::chrono::steady_clock::now();
  const auto tables = ramsum::build_sieve(x);
  const auto d = ramsum::c1_decomposition(x, y, tables);
  Report r;
  r.command = "c1-decompose";
  r.inputs = {{"x", x}, {"y", y}};
  r.header = {"x", "y", "c11", "c12", "c13", "c11_minus_c12_minus_c13", "c1_exact"};
  r.rows.push_back({x, y, d.c11, d.c12(), d.c13, d.total(), ramsum::c1_divisor_form(x, y, tables)});
  if (cfg.timings) r.timings["total_seconds"] = elapsed_since(start);
  return r;
}

Report run_compare(const RunConfig& cfg) {
  if (cfg.k != 1 && cfg.k != 2) throw UsageError("no asymptotic for k=" + std::to_string(cfg.k));
  const std::int64_t x = as_count(cfg.x, "x"), y = as_count(cfg.y, "y");
  if (y < x) throw UsageError("compare needs y >= x");
  check_budget(cfg, x, y);
  const auto start = std::chrono::steady_clock::now();
  const auto tables = ramsum::build_sieve(x);
  ramsum::CompareOptions options;
  options.b = cfg.b;
  options.quadrature = quadrature(cfg);
  options.sweep = sweep(cfg);
  if (cfg.k == 2) progress(cfg, "evaluating kappa kernel grid");
  const auto rep = ramsum::compare({x, y, cfg.k}, tables, options);

  Report r;
  r.command = "compare";
  r.inputs = {{"x", x}, {"y", y}, {"k", cfg.k}, {"b", cfg.b}};
  r.header = {"x", "y", "k", "exact", "predicted", "rel_error", "envelope", "regime", "u", "kappa"};
  auto opt = [](const std::optional<double>& v) -> Cell { return v ? Cell{*v} : Cell{}; };
  r.rows.push_back({x, y, std::int64_t{cfg.k}, rep.exact, rep.predicted, rep.rel_error, rep.envelope,
                    rep.regime ? Cell{ramsum::to_string(rep.regime->tag)} : Cell{}, opt(rep.u),
                    opt(rep.kappa)});
  r.warnings = rep.warnings;
  if (cfg.timings) r.timings["total_seconds"] = elapsed_since(start);
  return r;
}

std::vector<Cell> kappa_row(const ramsum::KappaResult& k) {
  return {k.u, k.value, k.quad_error, k.tail_bound};
}

Report run_kappa(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  progress(cfg, "evaluating kappa kernel grid");
  const auto k = ramsum::kappa(cfg.u, quadrature(cfg));
  Report r;
  r.command = "kappa";
  r.inputs = {{"u", cfg.u}, {"t_max", quadrature(cfg).t_max}, {"quad_step", cfg.quad_step}};
  r.header = {"u", "kappa", "quad_error", "tail_bound"};
  r.rows.push_back(kappa_row(k));
  if (cfg.timings) r.timings["total_seconds"] = elapsed_since(start);
  return r;
}

std::vector<double> table_points(const RunConfig& cfg) {
  if (!cfg.u_list.empty()) return cfg.u_list;
  if (!(cfg.grid_step > 0.0) || cfg.to < cfg.from) throw UsageError("need --from <= --to and --step > 0");
  const auto n = static_cast<std::int64_t>(std::llround((cfg.to - cfg.from) / cfg.grid_step));
  if (n > 1'000'000) throw UsageError("kappa-table grid exceeds 10^6 points");
  std::vector<double> us;
  for (std::int64_t i = 0; i <= n; ++i) {
    double u = cfg.from + static_cast<double>(i) * cfg.grid_step;
    if (std::abs(u) < 1e-9 * cfg.grid_step) u = 0.0;
    us.push_back(u);
  }
  return us;
}

Report run_kappa_table(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto us = table_points(cfg);
  progress(cfg, "evaluating kappa kernel grid");
  const auto settings = quadrature(cfg);
  const auto grid = ramsum::kernel_grid(settings);
  Report r;
  r.command = "kappa-table";
  r.inputs = {{"points", us.size()}, {"t_max", settings.t_max}, {"quad_step", cfg.quad_step}};
  r.header = {"u", "kappa", "quad_error", "tail_bound"};
  if (cfg.decay) {
    r.header.insert(r.header.end(), {"bound", "reference", "within_bound"});
    const auto rows = ramsum::kappa_decay_scan(us, settings);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto row = kappa_row(grid->evaluate(us[i]));
      row.insert(row.end(), {rows[i].bound, rows[i].reference, rows[i].within_bound});
      r.rows.push_back(row);
      if (!rows[i].within_bound) r.warnings.push_back("|kappa(" + ramsum::cli::format_number(us[i]) + ")| exceeds 0.67/|u|");
    }
  } else {
    for (double u : us) r.rows.push_back(kappa_row(grid->evaluate(u)));
  }
  if (cfg.timings) r.timings["total_seconds"] = elapsed_since(start);
  return r;
}

Report run_kappa_min(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  progress(cfg, "evaluating kappa kernel grid");
  const auto m = ramsum::kappa_min(cfg.lo, cfg.hi, cfg.tol, quadrature(cfg));
  Report r;
  r.command = "kappa-min";
  r.inputs = {{"lo", cfg.lo}, {"hi", cfg.hi}, {"tol", cfg.tol}};
  r.header = {"u", "kappa", "at_boundary", "evaluations"};
  r.rows.push_back({m.u, m.value, m.at_boundary, std::int64_t{m.evaluations}});
  if (m.at_boundary) r.warnings.emplace_back("minimum found at a bracket endpoint");
  if (cfg.timings) r.timings["total_seconds"] = elapsed_since(start);
  return r;
}

Report run_series(const RunConfig& cfg) {
  if (cfg.count < 1 || cfg.count > 40 || cfg.first < 1) throw UsageError("need --first >= 1 and 1 <= --count <= 40");
  const auto cutoffs = ramsum::doubling_cutoffs(cfg.first, cfg.count);
  if (cutoffs.back() > 100'000'000) throw UsageError("largest cutoff exceeds 10^8");
  Report r;
  r.command = "series-check";
  std::vector<ramsum::SeriesRow> rows;
  if (cfg.which == "eq1") {
    const double s = cfg.s == 0.0 ? 2.0 : cfg.s;
    r.inputs = {{"which", "eq1"}, {"n", cfg.n}, {"s", s}};
    rows = ramsum::ramanujan_dirichlet_series(cfg.n, s, cutoffs);
  } else {
    const double s = cfg.s == 0.0 ? 4.0 : cfg.s;
    r.inputs = {{"which", "eq6"}, {"s", s}, {"a", cfg.a}, {"b", cfg.b_exp}};
    rows = ramsum::divisor_product_series(s, cfg.a, cfg.b_exp, cutoffs);
  }
  r.header = {"cutoff", "partial", "target", "abs_error", "rel_error"};
  for (const auto& row : rows) r.rows.push_back({row.cutoff, row.partial, row.target, row.abs_error, row.rel_error});
  return r;
}

Report run_regime(const RunConfig& cfg) {
  if (!(cfg.x > 0.0) || !(cfg.y > 0.0)) throw UsageError("--x and --y must be positive");
  const auto tag = ramsum::classify_regime(cfg.x, cfg.y, cfg.b);
  Report r;
  r.command = "regime";
  r.inputs = {{"x", cfg.x}, {"y", cfg.y}, {"b", cfg.b}};
  r.header = {"x", "y", "b", "regime", "u"};
  r.rows.push_back({cfg.x, cfg.y, cfg.b, ramsum::to_string(tag.tag), std::log(cfg.y) - 2.0 * std::log(cfg.x)});
  // Part (ii) is an empty range unless (ln x)^B <= x.
  if (cfg.x <= std::exp(1.0) || cfg.b * std::log(std::log(cfg.x)) > std::log(cfg.x)) {
    r.warnings.emplace_back("part (ii) range is empty at this x for the given B");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ramanujan-sum moments, asymptotic main terms and the kappa integral"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<Report(const RunConfig&)> handler;

  auto* exact = app.add_subcommand("exact", "Exact C_k(x, y)");
  add_xy(exact, cfg);
  exact->add_option("--k", cfg.k, "Moment order")->default_val(1);
  add_sweep(exact, cfg);
  add_common(exact, cfg);
  exact->callback([&] { handler = run_exact; });

  auto* divisor = app.add_subcommand("c1-divisor", "C_1(x, y) from the divisor-pair identity");
  add_xy(divisor, cfg);
  add_common(divisor, cfg);
  divisor->callback([&] { handler = run_c1_divisor; });

  auto* decompose = app.add_subcommand("c1-decompose", "C_1 split into C11 - C12 - C13");
  add_xy(decompose, cfg);
  add_common(decompose, cfg);
  decompose->callback([&] { handler = run_c1_decompose; });

  auto* cmp = app.add_subcommand("compare", "Exact moment against its main term (k = 1 or 2)");
  add_xy(cmp, cfg);
  cmp->add_option("--k", cfg.k, "Moment order")->default_val(1);
  cmp->add_option("--b", cfg.b, "Regime parameter B");
  add_sweep(cmp, cfg);
  cmp->add_option("--t-max", cfg.t_max, "Truncation T of the kappa integral");
  cmp->add_option("--quad-step", cfg.quad_step, "Simpson node spacing");
  add_common(cmp, cfg);
  cmp->callback([&] { handler = run_compare; });

  auto* kap = app.add_subcommand("kappa", "kappa(u) with error estimates");
  kap->add_option("--u", cfg.u, "Argument u")->required();
  kap->add_flag("--truncated", cfg.truncated, "Integrate over |t| <= 60 only");
  add_quadrature(kap, cfg);
  add_common(kap, cfg);
  kap->callback([&] { handler = run_kappa; });

  auto* table = app.add_subcommand("kappa-table", "kappa over a grid or list of u");
  table->add_option("--from", cfg.from, "First u");
  table->add_option("--to", cfg.to, "Last u");
  table->add_option("--step", cfg.grid_step, "Grid spacing in u");
  table->add_option("--u-list", cfg.u_list, "Explicit comma-separated u values")->delimiter(',');
  table->add_flag("--truncated", cfg.truncated, "Integrate over |t| <= 60 only");
  table->add_flag("--decay", cfg.decay, "Add the 0.67/|u| bound and exp(-|u|^0.55) reference");
  add_quadrature(table, cfg);
  add_common(table, cfg);
  table->callback([&] { handler = run_kappa_table; });

  auto* kmin = app.add_subcommand("kappa-min", "Golden-section minimum of kappa");
  kmin->add_option("--lo", cfg.lo, "Bracket start");
  kmin->add_option("--hi", cfg.hi, "Bracket end");
  kmin->add_option("--tol", cfg.tol, "Tolerance in u");
  kmin->add_flag("--truncated", cfg.truncated, "Integrate over |t| <= 60 only");
  add_quadrature(kmin, cfg);
  add_common(kmin, cfg);
  kmin->callback([&] { handler = run_kappa_min; });

  auto* series = app.add_subcommand("series-check", "Convergence of the Dirichlet-series identities");
  series->add_option("--which", cfg.which, "eq1: sum c_q(n)/q^s; eq6: sum sigma_a sigma_b / n^s")
      ->check(CLI::IsMember({"eq1", "eq6"}));
  series->add_option("--n", cfg.n, "n for eq1")->check(CLI::PositiveNumber);
  series->add_option("--s", cfg.s, "Exponent s (default 2 for eq1, 4 for eq6)");
  series->add_option("--a", cfg.a, "Exponent a for eq6");
  series->add_option("--b", cfg.b_exp, "Exponent b for eq6");
  series->add_option("--first", cfg.first, "Smallest cutoff");
  series->add_option("--count", cfg.count, "Number of doublings");
  add_common(series, cfg);
  series->callback([&] { handler = run_series; });

  auto* regime = app.add_subcommand("regime", "Classify (x, y) against the second-moment regimes");
  regime->add_option("--x", cfg.x, "x")->required();
  regime->add_option("--y", cfg.y, "y")->required();
  regime->add_option("--b", cfg.b, "Regime parameter B");
  add_common(regime, cfg);
  regime->callback([&] { handler = run_regime; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ramsum: " << e.what() << "\n";
    return 2;
  }

  try {
    const Report report = handler(cfg);
    for (const auto& w : report.warnings) std::cerr << "ramsum: warning: " << w << "\n";
    std::ostringstream out;
    if (cfg.format == "json") {
      ramsum::cli::write_json(out, report);
    } else {
      ramsum::cli::write_csv(out, report);
    }
    if (cfg.output.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file || !(file << out.str())) {
        std::cerr << "ramsum: cannot write " << cfg.output << "\n";
        return 1;
      }
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "ramsum: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ramsum: error: " << e.what() << "\n";
    return 1;
  }
}
