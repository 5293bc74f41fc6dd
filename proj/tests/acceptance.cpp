// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit when
// anything fails. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tlfrac/dyadic.hpp"
#include "tlfrac/fraccalc.hpp"
#include "tlfrac/gamma.hpp"
#include "tlfrac/oracle.hpp"
#include "tlfrac/rng.hpp"
#include "tlfrac/solvers.hpp"
#include "tlfrac/stieltjes.hpp"

namespace {

using namespace tlfrac;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: Volterra benchmark table --------------------------------

constexpr double kTable1H[8] = {0.01, 0.2, 0.2, 0.2, 0.5, 0.5, 0.8, 0.8};
constexpr double kTable1Alpha[8] = {0.05, 0.3, 0.5, 0.8, 0.51, 0.8, 0.81, 0.9};
constexpr double kTable1Ref[8][8] = {
    {2.33e-01, 1.92e-01, 1.62e-01, 1.39e-01, 1.21e-01, 1.07e-01, 9.48e-02, 8.50e-02},
    {6.76e-02, 4.32e-02, 2.83e-02, 1.89e-02, 1.28e-02, 8.75e-03, 6.02e-03, 4.17e-03},
    {5.83e-02, 2.66e-02, 1.53e-02, 9.16e-03, 5.53e-03, 3.35e-03, 2.04e-03, 1.25e-03},
    {5.04e-02, 2.25e-02, 9.96e-03, 4.37e-03, 1.91e-03, 8.35e-04, 3.64e-04, 1.71e-04},
    {2.38e-02, 9.02e-03, 3.34e-03, 1.23e-03, 5.97e-04, 2.92e-04, 1.43e-04, 7.07e-05},
    {2.04e-02, 7.56e-03, 2.76e-03, 9.97e-04, 3.58e-04, 1.28e-04, 4.54e-05, 1.61e-05},
    {5.60e-03, 1.78e-03, 5.50e-04, 1.68e-04, 5.06e-05, 1.51e-05, 4.50e-06, 1.33e-06},
    {5.39e-03, 1.71e-03, 5.28e-04, 1.61e-04, 4.85e-05, 1.45e-05, 4.31e-06, 1.27e-06},
};

void criterion1() {
  const auto t0 = Clock::now();
  const int grid = 14;
  bool pass = true;
  double worst_rel = 0.0;
  std::string worst_at = "-";
  for (int col = 0; col < 8; ++col) {
    const auto bench = exact_langevin(kTable1H[col], kTable1Alpha[col]);
    const auto prob = bench.problem(grid - 1);
    double prev = 1e300;
    for (int p = 3; p <= 10; ++p) {
      const auto sol = solve_volterra(prob, p);
      // Matched truncation: the exact solution expanded to the same depth,
      // so the norm sees the solved coefficients, not the shared tail.
      const auto xe = expand([&bench](double t) { return bench.x_exact(t); }, bench.hurst, p);
      const double err = sup_distance(xe, sol.expansion, grid);
      const double ref = kTable1Ref[col][p - 3];
      const double rel = std::fabs(err - ref) / ref;
      const bool row_ok = ref < 1e-5 ? (rel <= 0.5 || std::fabs(err - ref) <= 2e-6) : rel <= 0.2;
      if (!row_ok) pass = false;
      if (rel > worst_rel) {
        worst_rel = rel;
        worst_at = "H=" + std::to_string(kTable1H[col]).substr(0, 4) +
                   " a=" + std::to_string(kTable1Alpha[col]).substr(0, 4) +
                   " p=" + std::to_string(p);
      }
      if (err > prev * (1.0 + 1e-12)) pass = false;  // columns non-increasing in p
      prev = err;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "worst relative deviation %.3f at %s, %.1f s", worst_rel,
                worst_at.c_str(), seconds_since(t0));
  report(1, pass, "Volterra error table reproduced on the level-14 grid", buf);
}

// ---- criterion 2: linear benchmark table -----------------------------------

constexpr double kTable2H[6] = {0.51, 0.6, 0.7, 0.8, 0.9, 0.99};
constexpr double kTable2SupRef[6] = {0.18934, 0.08398, 0.03218, 0.01142, 0.00325, 0.00047};
constexpr double kTable2CoeffRef[6] = {0.03701, 0.01305, 0.00409, 0.00124, 0.00043, 0.00028};

void criterion2() {
  const auto t0 = Clock::now();
  const int grid = 14;
  const int p = 6;
  bool pass = true;
  double worst_rel = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double h = kTable2H[i];
    const auto g = expand(
        [h](double t) { return std::pow(0.5, h) - std::pow(std::fabs(t - 0.5), h); }, h, 10);
    const LinearRSProblem prob(1.0, -2.0, 3.0, 0.5, g, h);
    const auto sol = solve_linear_rs(prob, p);
    const auto exact = exact_linear(1.0, -2.0, 3.0, [h](double t) {
      return std::pow(0.5, h) - std::pow(std::fabs(t - 0.5), h);
    });
    // Here the analytic solution is the reference: the solved expansion's
    // own tail is negligible, while the exact solution keeps its kink
    // detail beyond level p as genuine error.
    const std::int64_t n = std::int64_t{1} << grid;
    double sup = 0.0;
    for (std::int64_t j = 0; j <= n; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(n);
      sup = std::fmax(sup, std::fabs(sol.expansion.value(t) - exact(t)));
    }
    const auto xexp = expand(exact, h, p);
    double cdev = 0.0;
    for (int m = 0; m <= p; ++m) {
      for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k) {
        cdev = std::fmax(cdev, std::fabs(xexp.coeff(m, k) - sol.expansion.coeff(m, k)));
      }
    }
    const auto row_ok = [&](double got, double ref) {
      const double rel = std::fabs(got - ref) / ref;
      worst_rel = std::fmax(worst_rel, rel);
      return ref < 1e-3 ? rel <= 0.5 : rel <= 0.2;
    };
    if (!row_ok(sup, kTable2SupRef[i])) pass = false;
    if (!row_ok(cdev, kTable2CoeffRef[i])) pass = false;
  }
  char buf[120];
  std::snprintf(buf, sizeof(buf), "worst relative deviation %.3f, %.1f s", worst_rel,
                seconds_since(t0));
  report(2, pass, "linear RS error table reproduced at p=6", buf);
}

// ---- criterion 3: closed form vs quadrature oracles ------------------------

void criterion3() {
  Xoshiro256 rng(1003);
  const int grid = 14;
  const std::int64_t n = std::int64_t{1} << grid;
  double worst_int = 0.0;
  for (int it = 0; it < 500; ++it) {
    const int m = static_cast<int>(rng.below(9));
    const auto k = static_cast<std::int64_t>(rng.below(std::uint64_t{1} << m));
    const DyadicIndex idx{m, k};
    const double alpha = 0.02 + 0.96 * rng.uniform01();
    const double t = static_cast<double>(rng.below(static_cast<std::uint64_t>(n) + 1)) /
                     static_cast<double>(n);
    // Haar, left and right, against piecewise-constant product integration.
    const double hl = rl_integral_pc([idx](double u) { return haar_eval(idx, u); }, grid, alpha, t);
    worst_int = std::fmax(worst_int, std::fabs(hl - frac_integral_haar_left(alpha, idx, t)));
    const double hr = rl_integral_pc(
        [idx](double u) { return haar_eval(idx, 1.0 - u); }, grid, alpha, 1.0 - t);
    worst_int = std::fmax(worst_int, std::fabs(hr - frac_integral_haar_right(alpha, idx, t, 1.0)));
    // Schauder, left and right, against piecewise-linear product integration.
    const auto tent = GridFunction::sample([idx](double u) { return schauder_eval(idx, u); }, grid);
    const double sl = rl_integral_pl(tent, alpha, t);
    worst_int = std::fmax(worst_int, std::fabs(sl - frac_integral_schauder_left(alpha, idx, t)));
    const auto refl = GridFunction::sample(
        [idx](double u) { return schauder_eval(idx, 1.0 - u); }, grid);
    const double sr = rl_integral_pl(refl, alpha, 1.0 - t);
    worst_int = std::fmax(worst_int, std::fabs(sr - frac_integral_schauder_right(alpha, idx, t, 1.0)));
  }
  const bool pass_int = worst_int <= 1e-8;

  // Derivatives against Grunwald-Letnikov. The first-order scheme cannot hold
  // an absolute 1e-3 within a few steps of a support corner or as the order
  // approaches 1, so the sweep keeps t at least 32 steps off the corners and
  // checks (a) absolute agreement for orders up to 1/2 and (b) agreement of
  // the unit-normalized kernels 2^{-m/2} D across the full order range.
  double worst_abs = 0.0;
  double worst_scaled = 0.0;
  int taken_lo = 0;
  int taken_all = 0;
  while (taken_lo < 500 || taken_all < 500) {
    const int m = static_cast<int>(rng.below(9));
    const auto k = static_cast<std::int64_t>(rng.below(std::uint64_t{1} << m));
    const DyadicIndex idx{m, k};
    const double alpha = 0.02 + 0.96 * rng.uniform01();
    const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n) - 1) + 1);
    const double t = static_cast<double>(j) / static_cast<double>(n);
    double dmin = 1.0;
    for (double node : {idx.left(), idx.mid(), idx.right()}) {
      dmin = std::fmin(dmin, std::fabs(t - node));
    }
    if (dmin < 32.0 / static_cast<double>(n)) continue;
    const auto tent = GridFunction::sample([idx](double u) { return schauder_eval(idx, u); }, grid);
    const double gl = gl_derivative(tent, alpha, t);
    const double cf = frac_deriv_schauder_left(alpha, idx, t);
    const auto refl = GridFunction::sample(
        [idx](double u) { return schauder_eval(idx, 1.0 - u); }, grid);
    const double glr = gl_derivative(refl, alpha, 1.0 - t);
    const double cfr = frac_deriv_schauder_right(alpha, idx, t, 1.0);
    const double dl = std::fabs(cf - gl);
    const double dr = std::fabs(cfr - glr);
    if (taken_all < 500) {
      ++taken_all;
      worst_scaled = std::fmax(worst_scaled, std::fmax(dl, dr) * std::exp2(-0.5 * m));
    }
    if (alpha <= 0.5 && taken_lo < 500) {
      ++taken_lo;
      worst_abs = std::fmax(worst_abs, std::fmax(dl, dr));
    }
  }
  const bool pass_der = worst_abs <= 1e-3 && worst_scaled <= 1e-3;

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "integrals max |diff| %.2e (tol 1e-8); derivatives max %.2e abs / %.2e scaled "
                "(tol 1e-3)",
                worst_int, worst_abs, worst_scaled);
  report(3, pass_int && pass_der, "closed forms agree with the quadrature and GL oracles", buf);
}

// ---- criterion 4: basis identities -----------------------------------------

void criterion4() {
  Xoshiro256 rng(1004);
  // e = I^1 H from the tent geometry.
  double worst_prim = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const int m = static_cast<int>(rng.below(11));
    const auto k = static_cast<std::int64_t>(rng.below(std::uint64_t{1} << m));
    const DyadicIndex idx{m, k};
    const double t = rng.uniform01();
    const auto clip = [&](double lo, double hi) { return std::fmax(0.0, std::fmin(t, hi) - lo); };
    const double integral = std::sqrt(std::exp2(m)) * (clip(idx.left(), idx.mid()) -
                                                       clip(idx.mid(), idx.right()));
    worst_prim = std::fmax(worst_prim, std::fabs(schauder_eval(idx, t) - integral));
  }
  const bool pass_prim = worst_prim <= 1e-12;

  // Semigroup: I^a I^b H = I^{a+b} H, the outer integral by tanh-sinh
  // quadrature on the analytic pieces with the singular piece in the
  // distance variable.
  double worst_semi = 0.0;
  for (int it = 0; it < 100; ++it) {
    const int m = static_cast<int>(rng.below(5));
    const auto k = static_cast<std::int64_t>(rng.below(std::uint64_t{1} << m));
    const DyadicIndex idx{m, k};
    const double a = 0.1 + 0.8 * rng.uniform01();
    const double b = 0.1 + 0.8 * rng.uniform01();
    const double t = 0.05 + 0.95 * rng.uniform01();
    const auto inner = [&](double u) { return frac_integral_haar_left(b, idx, u); };
    double outer = 0.0;
    std::vector<double> cuts{0.0, idx.left(), idx.mid(), idx.right()};
    std::erase_if(cuts, [t](double c) { return c >= t; });
    cuts.push_back(t);
    for (std::size_t i = 0; i + 2 < cuts.size(); ++i) {
      if (cuts[i + 1] <= cuts[i]) continue;
      outer += integrate_de([&](double u) { return std::pow(t - u, a - 1.0) * inner(u); },
                            cuts[i], cuts[i + 1]);
    }
    const double last = cuts[cuts.size() - 2];
    outer += integrate_de([&](double v) { return std::pow(v, a - 1.0) * inner(t - v); }, 0.0,
                          t - last);
    outer /= gamma_fn(a);
    worst_semi = std::fmax(worst_semi, std::fabs(outer - frac_integral_haar_left(a + b, idx, t)));
  }
  const bool pass_semi = worst_semi <= 1e-7;

  // Inversion: I^a (D^a x) recovers a zero-affine expansion.
  const auto x = expand([](double t) { return std::sin(3.0 * t) * t * (1.0 - t); }, 0.6, 8);
  double worst_inv = 0.0;
  for (double alpha : {0.15, 0.3, 0.45}) {
    const auto dgrid = GridFunction::sample(
        [&](double u) { return u == 0.0 ? 0.0 : frac_deriv_expansion_left(x, alpha, u, 8); }, 14);
    for (int j = 1; j <= 32; ++j) {
      const double t = static_cast<double>(j) / 32.0;
      worst_inv = std::fmax(worst_inv, std::fabs(rl_integral_pl(dgrid, alpha, t) - x.value(t)));
    }
  }
  const bool pass_inv = worst_inv <= 1e-4;

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "primitive %.2e (tol 1e-12); semigroup %.2e (tol 1e-7); inversion %.2e (tol 1e-4)",
                worst_prim, worst_semi, worst_inv);
  report(4, pass_prim && pass_semi && pass_inv, "basis identities hold", buf);
}

// ---- criterion 5: kernel bounds --------------------------------------------

void criterion5() {
  Xoshiro256 rng(1005);
  double worst_ratio = 0.0;
  for (int it = 0; it < 100000; ++it) {
    const int m = static_cast<int>(rng.below(11));
    const auto k = static_cast<std::int64_t>(rng.below(std::uint64_t{1} << m));
    const double alpha = 0.02 + 1.96 * rng.uniform01();
    const double t = rng.uniform01();
    const double bound = std::exp2(-m * alpha) / gamma_fn(1.0 + alpha);
    worst_ratio =
        std::fmax(worst_ratio, std::fabs(tau1(alpha, DyadicIndex{m, k}, t)) / bound);
  }
  const bool pass_tau = worst_ratio <= 1.0 + 1e-12;

  bool pass_uniform = true;
  double worst_frac = 0.0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double c1 = c1_constant(alpha);
    for (int m = 1; m <= 10; ++m) {
      const double cap = c1 * std::exp2(m * (alpha - 1.0));
      const int grid = 1 << 11;
      double sup1 = 0.0;
      double sup2 = 0.0;
      for (int j = 0; j <= grid; ++j) {
        const double t = static_cast<double>(j) / grid;
        double s1 = 0.0;
        double s2 = 0.0;
        for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k) {
          s1 += tau1(1.0 - alpha, {m, k}, t);
          s2 += tau2(1.0 - alpha, {m, k}, t, 1.0);
        }
        sup1 = std::fmax(sup1, std::fabs(s1));
        sup2 = std::fmax(sup2, std::fabs(s2));
      }
      if (sup1 > cap || sup2 > cap) pass_uniform = false;
      worst_frac = std::fmax(worst_frac, std::fmax(sup1, sup2) / cap);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "tau bound ratio %.4f; level-sum bound used %.0f%% of c1 cap", worst_ratio,
                100.0 * worst_frac);
  report(5, pass_tau && pass_uniform, "kernel bounds hold on dense sweeps", buf);
}

// ---- criterion 6: maximum of the Takagi-Landsberg function ------------------

void criterion6() {
  bool pass = true;
  double worst = 0.0;
  for (double h : {0.5, 1.0}) {
    const auto x = takagi_landsberg(h, 20);
    const std::int64_t n = std::int64_t{1} << 20;
    double sup = 0.0;
    for (std::int64_t j = 0; j <= n; ++j) {
      sup = std::fmax(sup, x.value(static_cast<double>(j) / static_cast<double>(n)));
    }
    const double dev = std::fabs(sup - takagi_landsberg_max(h));
    worst = std::fmax(worst, dev);
    if (dev > 2e-3) pass = false;
  }
  char buf[120];
  std::snprintf(buf, sizeof(buf), "max |sup - closed form| %.2e (tol 2e-3)", worst);
  report(6, pass, "partial sums attain the closed-form maximum at p=20", buf);
}

// ---- criterion 7: Riemann-Stieltjes integral --------------------------------

void criterion7() {
  const double h2 = 0.8;
  const auto g = expand(
      [h2](double t) { return std::pow(0.5, h2) - std::pow(std::fabs(t - 0.5), h2); }, h2, 9);
  const auto one = HolderExpansion::zero(0.9, 1.0, 1.0, 0);
  const auto id = HolderExpansion::zero(0.9, 0.0, 1.0, 0);
  double worst_dg = 0.0;
  double worst_sdg = 0.0;
  for (int j = 0; j <= 64; ++j) {
    const double t = static_cast<double>(j) / 64.0;
    worst_dg = std::fmax(worst_dg, std::fabs(rs_integral(one, g, t) - (g.value(t) - g.f0())));
    const double moment = t * g.value(t) - frac_integral_expansion(g, 1.0, t, g.max_level());
    worst_sdg = std::fmax(worst_sdg, std::fabs(rs_integral(id, g, t) - moment));
  }

  const auto fe = expand([](double t) { return std::pow(t, 0.85) - 0.3 * t; }, 0.85, 9);
  const auto fgrid = GridFunction::from_expansion(fe, 14);
  const auto ggrid = GridFunction::from_expansion(g, 14);
  double worst_sum = 0.0;
  for (double t : {0.25, 0.375, 0.625, 0.875, 1.0}) {
    const auto s = rs_sum(fgrid, ggrid, t);
    worst_sum = std::fmax(worst_sum, std::fabs(rs_integral(fe, g, t) - s.richardson));
  }
  const bool pass = worst_dg <= 1e-12 && worst_sdg <= 1e-10 && worst_sum <= 1e-3;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "int dg %.2e (tol 1e-12); int s dg %.2e (tol 1e-10); vs RS sums %.2e (tol 1e-3)",
                worst_dg, worst_sdg, worst_sum);
  report(7, pass, "series Riemann-Stieltjes integral checks out", buf);
}

// ---- criterion 8: solver self-consistency -----------------------------------

void criterion8() {
  bool pass = true;
  double worst_res_v = 0.0;
  for (const auto& [h, alpha] : std::vector<std::pair<double, double>>{{0.5, 0.8}, {0.2, 0.5}}) {
    const auto bench = exact_langevin(h, alpha);
    for (int p : {3, 5}) {
      const auto prob = bench.problem(p + 2);
      const auto sol = solve_volterra(prob, p, p + 1);
      worst_res_v = std::fmax(worst_res_v, volterra_residual_sup(prob, sol, p + 2));
    }
  }
  if (worst_res_v > 1e-8) pass = false;

  double worst_res_l = 0.0;
  for (double h : {0.6, 0.8}) {
    const auto g = expand(
        [h](double t) { return std::pow(0.5, h) - std::pow(std::fabs(t - 0.5), h); }, h, 8);
    const LinearRSProblem prob(1.0, -2.0, 3.0, 0.5, g, h);
    for (int p : {3, 4}) {
      const auto sol = solve_linear_rs(prob, p, p + 1);
      worst_res_l = std::fmax(worst_res_l, linear_residual_sup(prob, sol, p + 2));
    }
  }
  if (worst_res_l > 1e-6) pass = false;

  double worst_picard = 0.0;
  {
    const auto bench = exact_langevin(0.5, 0.8);
    for (int p : {3, 5}) {
      const auto prob = bench.problem(9);
      const auto sol = solve_volterra(prob, p, 7);
      const auto pic = volterra_picard(prob, p, picard_iterations(prob.theta, prob.alpha, 1e-13), 8);
      for (std::int64_t j = 0; j <= pic.points(); ++j) {
        worst_picard = std::fmax(worst_picard,
                                 std::fabs(pic.values[static_cast<std::size_t>(j)] -
                                           sol.expansion.value(pic.t_of(j))));
      }
    }
  }
  if (worst_picard > 1e-6) pass = false;

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "residuals: Volterra %.2e (tol 1e-8), linear %.2e (tol 1e-6); Picard gap %.2e "
                "(tol 1e-6)",
                worst_res_v, worst_res_l, worst_picard);
  report(8, pass, "solutions satisfy their own truncated equations", buf);
}

// ---- criterion 9: divergence diagnostic --------------------------------------

void criterion9() {
  bool pass = true;
  for (const auto& [h, m0, k0] : std::vector<std::tuple<double, int, std::int64_t>>{
           {0.3, 1, 1}, {0.5, 1, 1}, {0.5, 2, 3}, {0.7, 3, 5}}) {
    const auto d = dm_sequence(h, m0, k0, 12);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!(d[i] < 0.0)) pass = false;
      if (i > 0 && !(d[i] < d[i - 1])) pass = false;
    }
  }
  report(9, pass, "divergence sequence is strictly negative and decreasing",
         "H in {0.3,0.5,0.7}, m0 up to 3, M = 12");
}

// ---- figure-data qualitative check -------------------------------------------

void figure_check() {
  // Random driver with a fixed seed; solving under a too-large exponent must
  // produce a strictly larger sup error than the well-specified solve.
  const double h_true = 0.51;
  Xoshiro256 rng(2024);
  std::vector<std::vector<double>> levels(8);
  for (int m = 0; m <= 7; ++m) {
    levels[static_cast<std::size_t>(m)].resize(std::size_t{1} << m);
    for (auto& c : levels[static_cast<std::size_t>(m)]) c = rng.uniform_pm1();
  }
  const HolderExpansion g_true(h_true, 0.0, 0.0, levels);
  const auto g_fn = [&g_true](double t) { return g_true.value(t); };
  const auto exact = exact_linear(1.0, -2.0, 3.0, g_fn);
  // The coefficient array is the data; the exponent is the model. A wrong
  // exponent reweights the same coefficients into a different driver.
  const auto sup_error_for = [&](double h_solve) {
    const HolderExpansion g(h_solve, 0.0, 0.0, levels);
    const LinearRSProblem prob(1.0, -2.0, 3.0, 0.5, g, h_solve);
    const auto sol = solve_linear_rs(prob, 6);
    const auto vals = linear_solution_values(prob, sol, 10);
    double sup = 0.0;
    for (std::size_t j = 0; j < vals.size(); ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(vals.size() - 1);
      sup = std::fmax(sup, std::fabs(vals[j] - exact(t)));
    }
    return sup;
  };
  const double well = sup_error_for(h_true);
  const double mis6 = sup_error_for(0.6);
  const double mis8 = sup_error_for(0.8);
  const bool pass = mis6 > well && mis8 > mis6;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "sup errors: true H %.4f < H=0.6 %.4f < H=0.8 %.4f", well,
                mis6, mis8);
  report(10, pass, "mis-specified exponents strictly inflate the benchmark error", buf);
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  figure_check();
  std::printf("%s: %d failure(s), %.1f s total\n", g_failures == 0 ? "ALL PASS" : "FAILED",
              g_failures, seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
