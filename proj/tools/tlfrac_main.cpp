// tlfrac: weighted Takagi-Landsberg expansions of Hoelder functions on [0,1],
// their fractional calculus in closed series form, and truncated-system
// solvers for the fractional Langevin and linear Riemann-Stieltjes equations.
//
// Exit codes: 0 ok, 2 input error, 3 solver error, 4 IO error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tlfrac/dyadic.hpp"
#include "tlfrac/errors.hpp"
#include "tlfrac/fraccalc.hpp"
#include "tlfrac/numfmt.hpp"
#include "tlfrac/oracle.hpp"
#include "tlfrac/rng.hpp"
#include "tlfrac/serialize.hpp"
#include "tlfrac/solvers.hpp"
#include "tlfrac/stieltjes.hpp"

namespace {

using namespace tlfrac;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw io_error("write failed: " + path);
}

// Reference error norms for the Volterra benchmark sweep (exact solution
// t^H, driver t^H (1 - t^alpha), theta = Gamma(alpha+H+1)/Gamma(H+1)); one
// column per (H, alpha) pair, rows p = 3..10.
constexpr double kTable1H[8] = {0.01, 0.2, 0.2, 0.2, 0.5, 0.5, 0.8, 0.8};
constexpr double kTable1Alpha[8] = {0.05, 0.3, 0.5, 0.8, 0.51, 0.8, 0.81, 0.9};
constexpr double kTable1Ref[8][8] = {
    // p = 3     4         5         6         7         8         9         10
    {2.33e-01, 1.92e-01, 1.62e-01, 1.39e-01, 1.21e-01, 1.07e-01, 9.48e-02, 8.50e-02},
    {6.76e-02, 4.32e-02, 2.83e-02, 1.89e-02, 1.28e-02, 8.75e-03, 6.02e-03, 4.17e-03},
    {5.83e-02, 2.66e-02, 1.53e-02, 9.16e-03, 5.53e-03, 3.35e-03, 2.04e-03, 1.25e-03},
    {5.04e-02, 2.25e-02, 9.96e-03, 4.37e-03, 1.91e-03, 8.35e-04, 3.64e-04, 1.71e-04},
    {2.38e-02, 9.02e-03, 3.34e-03, 1.23e-03, 5.97e-04, 2.92e-04, 1.43e-04, 7.07e-05},
    {2.04e-02, 7.56e-03, 2.76e-03, 9.97e-04, 3.58e-04, 1.28e-04, 4.54e-05, 1.61e-05},
    {5.60e-03, 1.78e-03, 5.50e-04, 1.68e-04, 5.06e-05, 1.51e-05, 4.50e-06, 1.33e-06},
    {5.39e-03, 1.71e-03, 5.28e-04, 1.61e-04, 4.85e-05, 1.45e-05, 4.31e-06, 1.27e-06},
};

// Reference errors for the linear benchmark at p = 6 with beta = -2,
// gamma = 3, x0 = 1, driver 0.5^H - |t-0.5|^H: sup norm of X - X_p and max
// deviation of the solved coefficients.
constexpr double kTable2H[6] = {0.51, 0.6, 0.7, 0.8, 0.9, 0.99};
constexpr double kTable2SupRef[6] = {0.18934, 0.08398, 0.03218, 0.01142, 0.00325, 0.00047};
constexpr double kTable2CoeffRef[6] = {0.03701, 0.01305, 0.00409, 0.00124, 0.00043, 0.00028};

double bridge_fn(double h, double t) {
  return std::pow(0.5, h) - std::pow(std::fabs(t - 0.5), h);
}

HolderExpansion random_wavelet(double hurst, int depth, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(depth) + 1);
  for (int m = 0; m <= depth; ++m) {
    auto& lvl = levels[static_cast<std::size_t>(m)];
    lvl.resize(std::size_t{1} << m);
    for (auto& c : lvl) c = rng.uniform_pm1();
  }
  return HolderExpansion(hurst, 0.0, 0.0, std::move(levels));
}

// Expansion selection shared by the pointwise operator commands.
struct ExpansionInput {
  std::string file;
  bool takagi = false;
  std::string fn;
  double hurst = 0.5;
  double shape_alpha = 0.8;
  int depth = 10;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--in", file, "input expansion JSON file");
    cmd->add_flag("--takagi", takagi, "use the Takagi-Landsberg expansion for --H");
    cmd->add_option("--fn", fn,
                    "built-in function: power | bridge | langevin-driver | parabola | random");
    cmd->add_option("--H", hurst, "Hurst/Hoelder exponent of the representation");
    cmd->add_option("--p", depth, "expansion depth (max level)")->check(CLI::Range(0, 24));
    cmd->add_option("--shape-alpha", shape_alpha, "order parameter of the langevin-driver shape");
    seed_opt = cmd->add_option("--seed", seed, "coefficient seed for --fn random");
  }

  HolderExpansion load() const {
    if (!file.empty()) return load_expansion(file);
    if (takagi) return takagi_landsberg(hurst, depth);
    const double h = hurst;
    if (fn == "power") return expand([h](double t) { return std::pow(t, h); }, h, depth);
    if (fn == "bridge") return expand([h](double t) { return bridge_fn(h, t); }, h, depth);
    if (fn == "langevin-driver") {
      const double a = shape_alpha;
      return expand([h, a](double t) { return std::pow(t, h) * (1.0 - std::pow(t, a)); }, h, depth);
    }
    if (fn == "parabola") return expand([](double t) { return t * (1.0 - t); }, hurst, depth);
    if (fn == "random") {
      if (!seed_opt || seed_opt->count() == 0) {
        throw std::invalid_argument("--fn random requires --seed");
      }
      return random_wavelet(hurst, depth, seed);
    }
    throw std::invalid_argument("no input: pass --in FILE, --takagi or --fn NAME");
  }
};

// Matched-truncation error: the exact solution expanded to the system depth,
// so the norm reflects the solved coefficients rather than the shared tail.
double volterra_benchmark_error(const LangevinBenchmark& bench, int p, int grid_level) {
  const auto prob = bench.problem(std::max(p, grid_level - 1));
  const auto sol = solve_volterra(prob, p);
  const auto xe = expand([&bench](double t) { return bench.x_exact(t); }, bench.hurst, p);
  return sup_distance(xe, sol.expansion, grid_level);
}

struct LinearBenchmarkResult {
  double sup_error = 0.0;
  double coeff_dev = 0.0;
  double x1 = 0.0;
};

LinearBenchmarkResult linear_benchmark_error(double h, int p, int grid_level) {
  const auto g = expand([h](double t) { return bridge_fn(h, t); }, h, std::max(p, 10));
  const LinearRSProblem prob(1.0, -2.0, 3.0, 0.5, g, h);
  const auto sol = solve_linear_rs(prob, p);
  const auto exact =
      exact_linear(prob.x0, prob.beta, prob.gamma, [h](double t) { return bridge_fn(h, t); });
  LinearBenchmarkResult r;
  r.x1 = sol.x1;
  const std::int64_t n = std::int64_t{1} << grid_level;
  for (std::int64_t j = 0; j <= n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    r.sup_error = std::fmax(r.sup_error, std::fabs(sol.expansion.value(t) - exact(t)));
  }
  const auto xexp = expand(exact, h, p);
  for (int m = 0; m <= p; ++m) {
    for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k) {
      r.coeff_dev =
          std::fmax(r.coeff_dev, std::fabs(xexp.coeff(m, k) - sol.expansion.coeff(m, k)));
    }
  }
  return r;
}

std::string repro_table1_csv(int grid_level) {
  std::ostringstream out;
  out << "p,H,alpha,error,reference,rel_dev\n";
  for (int col = 0; col < 8; ++col) {
    const auto bench = exact_langevin(kTable1H[col], kTable1Alpha[col]);
    for (int p = 3; p <= 10; ++p) {
      const double err = volterra_benchmark_error(bench, p, grid_level);
      const double ref = kTable1Ref[col][p - 3];
      out << p << ',' << format_shortest(kTable1H[col]) << ','
          << format_shortest(kTable1Alpha[col]) << ',' << format_shortest(err) << ','
          << format_shortest(ref) << ',' << format_shortest((err - ref) / ref) << '\n';
    }
  }
  return out.str();
}

std::string repro_table2_csv(int grid_level) {
  std::ostringstream out;
  out << "H,sup_error,sup_reference,sup_rel_dev,coeff_dev,coeff_reference,coeff_rel_dev\n";
  for (int i = 0; i < 6; ++i) {
    const auto r = linear_benchmark_error(kTable2H[i], 6, grid_level);
    out << format_shortest(kTable2H[i]) << ',' << format_shortest(r.sup_error) << ','
        << format_shortest(kTable2SupRef[i]) << ','
        << format_shortest((r.sup_error - kTable2SupRef[i]) / kTable2SupRef[i]) << ','
        << format_shortest(r.coeff_dev) << ',' << format_shortest(kTable2CoeffRef[i]) << ','
        << format_shortest((r.coeff_dev - kTable2CoeffRef[i]) / kTable2CoeffRef[i]) << '\n';
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Takagi-Landsberg expansions, fractional calculus, integral-equation solvers"};
  app.require_subcommand(1);

  struct Common {
    std::string out;
    std::string format = "csv";
  };
  const auto add_common = [](CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "output file (default stdout)");
    cmd->add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  // ---- expand ----
  auto* c_expand = app.add_subcommand("expand", "build an expansion and emit its JSON");
  Common out_expand;
  add_common(c_expand, out_expand);
  ExpansionInput in_expand;
  in_expand.add_flags(c_expand);
  c_expand->callback(
      [&] { write_text(out_expand.out, expansion_to_json(in_expand.load()) + "\n"); });

  // ---- eval ----
  auto* c_eval = app.add_subcommand("eval", "evaluate an expansion at a point");
  Common out_eval;
  add_common(c_eval, out_eval);
  ExpansionInput in_eval;
  in_eval.add_flags(c_eval);
  double t_eval = 0.5;
  c_eval->add_option("--t", t_eval, "evaluation point in [0,1]")->required();
  c_eval->callback([&] {
    if (!(t_eval >= 0.0 && t_eval <= 1.0)) throw std::invalid_argument("--t must lie in [0,1]");
    write_text(out_eval.out, format_sig17(in_eval.load().value(t_eval)) + "\n");
  });

  // ---- frac-int ----
  auto* c_int = app.add_subcommand("frac-int", "left fractional integral of an expansion");
  Common out_int;
  add_common(c_int, out_int);
  ExpansionInput in_int;
  in_int.add_flags(c_int);
  double alpha_int = 0.5;
  double t_int = 1.0;
  c_int->add_option("--alpha", alpha_int, "order, > 0")->required();
  c_int->add_option("--t", t_int, "evaluation point")->required();
  c_int->callback([&] {
    const auto x = in_int.load();
    write_text(out_int.out,
               format_sig17(frac_integral_expansion(x, alpha_int, t_int, x.max_level())) + "\n");
  });

  // ---- frac-deriv ----
  auto* c_der = app.add_subcommand("frac-deriv", "fractional derivative of an expansion");
  Common out_der;
  add_common(c_der, out_der);
  ExpansionInput in_der;
  in_der.add_flags(c_der);
  double alpha_der = 0.25;
  double t_der = 0.5;
  double big_t = 1.0;
  bool right = false;
  c_der->add_option("--alpha", alpha_der, "order in (0,1), below the Hurst exponent")->required();
  c_der->add_option("--t", t_der, "evaluation point")->required();
  c_der->add_option("--T", big_t, "right endpoint for --right");
  c_der->add_flag("--right", right, "right-sided derivative of x - x(T)");
  c_der->callback([&] {
    const auto x = in_der.load();
    const double v = right ? frac_deriv_expansion_right(x, alpha_der, t_der, big_t, x.max_level())
                           : frac_deriv_expansion_left(x, alpha_der, t_der, x.max_level());
    write_text(out_der.out, format_sig17(v) + "\n");
  });

  // ---- rs-integral ----
  auto* c_rs = app.add_subcommand("rs-integral", "Riemann-Stieltjes integral of f against g");
  Common out_rs;
  add_common(c_rs, out_rs);
  std::string f_path;
  std::string g_path;
  double t_rs = 1.0;
  c_rs->add_option("--f", f_path, "integrand expansion JSON")->required();
  c_rs->add_option("--g", g_path, "integrator expansion JSON")->required();
  c_rs->add_option("--t", t_rs, "upper limit");
  c_rs->callback([&] {
    const auto f = load_expansion(f_path);
    const auto g = load_expansion(g_path);
    write_text(out_rs.out, format_sig17(rs_integral(f, g, t_rs)) + "\n");
  });

  // ---- dm-sequence ----
  auto* c_dm = app.add_subcommand("dm-sequence", "divergence diagnostic at a dyadic point");
  Common out_dm;
  add_common(c_dm, out_dm);
  double dm_h = 0.5;
  int dm_m0 = 1;
  std::int64_t dm_k0 = 1;
  int dm_M = 12;
  c_dm->add_option("--H", dm_h, "Hurst exponent in (0,1)")->required();
  c_dm->add_option("--m0", dm_m0, "level of the dyadic point")->required();
  c_dm->add_option("--k0", dm_k0, "shift of the dyadic point")->required();
  c_dm->add_option("--M", dm_M, "last level");
  c_dm->callback([&] {
    const auto d = dm_sequence(dm_h, dm_m0, dm_k0, dm_M);
    std::ostringstream text;
    if (out_dm.format == "json") {
      text << '[';
      for (std::size_t i = 0; i < d.size(); ++i) text << (i ? "," : "") << format_shortest(d[i]);
      text << "]\n";
    } else {
      text << "m,d_m\n";
      for (std::size_t i = 0; i < d.size(); ++i) {
        text << (dm_m0 + static_cast<int>(i)) << ',' << format_shortest(d[i]) << '\n';
      }
    }
    write_text(out_dm.out, text.str());
  });

  // ---- solve-volterra ----
  auto* c_sv = app.add_subcommand("solve-volterra", "solve X = x0 + theta I^alpha X + g");
  Common out_sv;
  add_common(c_sv, out_sv);
  double sv_h = 0.5;
  double sv_alpha = 0.8;
  double sv_theta = 1.0;
  double sv_x0 = 0.0;
  int sv_p = 6;
  int sv_ext = -1;
  int sv_grid = 14;
  bool sv_benchmark = false;
  std::string sv_in;
  c_sv->add_option("--H", sv_h, "Hoelder exponent of the solution class");
  c_sv->add_option("--alpha", sv_alpha, "integral order, in (H,1)")->required();
  c_sv->add_option("--theta", sv_theta, "integral coefficient");
  c_sv->add_option("--x0", sv_x0, "initial value");
  c_sv->add_option("--p", sv_p, "truncation level of the solved system")->check(CLI::Range(1, 12));
  c_sv->add_option("--ext", sv_ext, "extension level (default: same as --p)");
  c_sv->add_option("--grid-level", sv_grid, "grid for the benchmark error report");
  c_sv->add_option("--in", sv_in, "driver expansion JSON");
  c_sv->add_flag("--benchmark", sv_benchmark,
                 "use the exact-solution driver; print x1 and the sup error");
  c_sv->callback([&] {
    if (sv_benchmark) {
      const auto bench = exact_langevin(sv_h, sv_alpha);
      std::ostringstream report;
      report << "x1,sup_error\n";
      const auto prob = bench.problem(std::max(sv_p, sv_grid - 1));
      const auto sol = solve_volterra(prob, sv_p, sv_ext < 0 ? sv_p : sv_ext);
      const auto vals = volterra_solution_values(prob, sol, sv_grid);
      double err = 0.0;
      for (std::size_t j = 0; j < vals.size(); ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(vals.size() - 1);
        err = std::fmax(err, std::fabs(vals[j] - bench.x_exact(t)));
      }
      report << format_shortest(sol.x1) << ',' << format_shortest(err) << '\n';
      write_text(out_sv.out, report.str());
      return;
    }
    if (sv_in.empty()) throw std::invalid_argument("solve-volterra needs --in or --benchmark");
    const VolterraProblem prob(sv_x0, sv_theta, sv_alpha, load_expansion(sv_in), sv_h);
    const auto sol = solve_volterra(prob, sv_p, sv_ext < 0 ? sv_p : sv_ext);
    write_text(out_sv.out, expansion_to_json(sol.expansion) + "\n");
  });

  // ---- solve-linear ----
  auto* c_sl = app.add_subcommand("solve-linear", "solve X = x0 + beta int X + gamma int X dg");
  Common out_sl;
  add_common(c_sl, out_sl);
  double sl_h = 0.7;
  double sl_alpha = 0.5;
  double sl_beta = -2.0;
  double sl_gamma = 3.0;
  double sl_x0 = 1.0;
  int sl_p = 6;
  int sl_ext = -1;
  int sl_grid = 14;
  bool sl_benchmark = false;
  std::string sl_in;
  c_sl->add_option("--H", sl_h, "Hoelder exponent of the driver, > 1/2");
  c_sl->add_option("--alpha", sl_alpha, "splitting order in (1-H, H)");
  c_sl->add_option("--beta", sl_beta, "drift coefficient, nonzero");
  c_sl->add_option("--gamma", sl_gamma, "noise coefficient");
  c_sl->add_option("--x0", sl_x0, "initial value");
  c_sl->add_option("--p", sl_p, "truncation level of the solved system")->check(CLI::Range(1, 9));
  c_sl->add_option("--ext", sl_ext, "extension level (default: same as --p)");
  c_sl->add_option("--grid-level", sl_grid, "grid for the benchmark error report");
  c_sl->add_option("--in", sl_in, "driver expansion JSON (g(0) = g(1) = 0)");
  c_sl->add_flag("--benchmark", sl_benchmark,
                 "use the bridge driver; print the sup error and coefficient deviation");
  c_sl->callback([&] {
    if (sl_benchmark) {
      const auto r = linear_benchmark_error(sl_h, sl_p, sl_grid);
      std::ostringstream report;
      report << "x1,sup_error,coeff_dev\n"
             << format_shortest(r.x1) << ',' << format_shortest(r.sup_error) << ','
             << format_shortest(r.coeff_dev) << '\n';
      write_text(out_sl.out, report.str());
      return;
    }
    if (sl_in.empty()) throw std::invalid_argument("solve-linear needs --in or --benchmark");
    const LinearRSProblem prob(sl_x0, sl_beta, sl_gamma, sl_alpha, load_expansion(sl_in), sl_h);
    const auto sol = solve_linear_rs(prob, sl_p, sl_ext < 0 ? sl_p : sl_ext);
    write_text(out_sl.out, expansion_to_json(sol.expansion) + "\n");
  });

  // ---- repro-table1 ----
  auto* c_t1 =
      app.add_subcommand("repro-table1", "Volterra benchmark sweep against the reference errors");
  Common out_t1;
  add_common(c_t1, out_t1);
  int grid_t1 = 14;
  c_t1->add_option("--grid-level", grid_t1, "sup-norm grid level");
  c_t1->callback([&] { write_text(out_t1.out, repro_table1_csv(grid_t1)); });

  // ---- repro-table2 ----
  auto* c_t2 =
      app.add_subcommand("repro-table2", "linear benchmark sweep against the reference errors");
  Common out_t2;
  add_common(c_t2, out_t2);
  int grid_t2 = 14;
  c_t2->add_option("--grid-level", grid_t2, "sup-norm grid level");
  c_t2->callback([&] { write_text(out_t2.out, repro_table2_csv(grid_t2)); });

  // ---- figure-data ----
  auto* c_fig = app.add_subcommand(
      "figure-data", "curves (t, g, X, X_p) for a random driver, true and mis-specified H");
  Common out_fig;
  add_common(c_fig, out_fig);
  double fig_h = 0.51;
  std::vector<double> fig_mis;
  std::uint64_t fig_seed = 0;
  int fig_p = 6;
  int fig_grid = 10;
  double fig_beta = -2.0;
  double fig_gamma = 3.0;
  double fig_x0 = 1.0;
  c_fig->add_option("--H", fig_h, "true Hoelder exponent of the driver");
  c_fig->add_option("--mis-H", fig_mis, "additional mis-specified exponents to solve with");
  auto* fig_seed_opt = c_fig->add_option("--seed", fig_seed, "random coefficient seed");
  c_fig->add_option("--p", fig_p, "truncation level")->check(CLI::Range(1, 9));
  c_fig->add_option("--grid-level", fig_grid, "output grid level");
  c_fig->add_option("--beta", fig_beta, "drift coefficient");
  c_fig->add_option("--gamma", fig_gamma, "noise coefficient");
  c_fig->add_option("--x0", fig_x0, "initial value");
  c_fig->callback([&] {
    if (fig_seed_opt->count() == 0) throw std::invalid_argument("figure-data requires --seed");
    if (out_fig.out.empty()) throw std::invalid_argument("figure-data requires --out PREFIX");
    // Driver with random coefficients, uniform on [-1,1], levels up to 7.
    // The coefficients are the data; each run reinterprets them under its
    // own exponent, so a mis-specified H solves for a different driver.
    const auto g_true = random_wavelet(fig_h, std::min(fig_p + 1, 7), fig_seed);
    const auto g_fn = [&g_true](double t) { return g_true.value(t); };
    const auto exact = exact_linear(fig_x0, fig_beta, fig_gamma, g_fn);
    std::vector<double> hs{fig_h};
    hs.insert(hs.end(), fig_mis.begin(), fig_mis.end());
    std::ostringstream summary;
    summary << "H,sup_error,file\n";
    for (double h : hs) {
      std::vector<std::vector<double>> coeffs;
      for (int m = 0; m <= g_true.max_level(); ++m) {
        coeffs.emplace_back(g_true.level(m).begin(), g_true.level(m).end());
      }
      const HolderExpansion g_solve(h, 0.0, 0.0, std::move(coeffs));
      const LinearRSProblem prob(fig_x0, fig_beta, fig_gamma, 0.5, g_solve, h);
      const auto sol = solve_linear_rs(prob, fig_p);
      const auto vals = linear_solution_values(prob, sol, fig_grid);
      std::ostringstream csv;
      csv << "t,g,X,Xp\n";
      double sup = 0.0;
      for (std::size_t j = 0; j < vals.size(); ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(vals.size() - 1);
        const double xv = exact(t);
        sup = std::fmax(sup, std::fabs(xv - vals[j]));
        csv << format_shortest(t) << ',' << format_shortest(g_fn(t)) << ','
            << format_shortest(xv) << ',' << format_shortest(vals[j]) << '\n';
      }
      std::ostringstream name;
      name << out_fig.out << "_H" << format_shortest(h) << ".csv";
      write_text(name.str(), csv.str());
      summary << format_shortest(h) << ',' << format_shortest(sup) << ',' << name.str() << '\n';
    }
    std::cout << summary.str();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly; bad flags are input errors
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const solver_error& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 3;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
