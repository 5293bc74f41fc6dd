#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tlfrac/dyadic.hpp"
#include "tlfrac/solvers.hpp"

namespace tlfrac {

/// Samples of a function at j/2^level, j = 0..2^level. The brute-force
/// reference layer works on these; nothing here is used by the closed-form
/// implementations it checks.
struct GridFunction {
  int level = 0;
  std::vector<double> values;

  static GridFunction sample(const std::function<double(double)>& f, int level);
  static GridFunction from_expansion(const HolderExpansion& x, int level);

  std::int64_t points() const { return std::int64_t{1} << level; }
  double t_of(std::int64_t j) const {
    return static_cast<double>(j) / static_cast<double>(points());
  }
  /// Grid index of a dyadic point; throws std::invalid_argument off the grid.
  std::int64_t index_of(double t) const;
};

/// Left Riemann-Liouville integral I_{0+}^alpha f at a grid point, by product
/// integration: f is taken piecewise linear between samples and the moments
/// of (t-u)^{alpha-1} on every cell are integrated exactly. Exact (to
/// roundoff) whenever the true f is piecewise linear on the grid, which holds
/// for every Schauder partial sum.
double rl_integral_pl(const GridFunction& f, double alpha, double t);

/// Product integration for piecewise-constant integrands: each cell carries
/// its midpoint value. Exact for Haar steps whose jumps sit on the grid,
/// which a node-sampled piecewise-linear rule is not.
double rl_integral_pc(const std::function<double(double)>& f, int level, double alpha,
                      double t);

/// Grunwald-Letnikov left derivative of order alpha in (0,1), regularized by
/// splitting off f(0) t^{-alpha}/Gamma(1-alpha). First-order accurate; a
/// coarse sign-and-scale check, not a certifier of digits. Throws on t = 0
/// with f(0) != 0.
double gl_derivative(const GridFunction& f, double alpha, double t);

struct RsSumResult {
  double value = 0.0;      // left-point sum at the full grid
  double coarse = 0.0;     // same sum on the half grid
  double richardson = 0.0; // 2 value - coarse
};

/// Left-point Riemann-Stieltjes sum of f against g up to a grid point, with
/// the half-grid value and a first-order Richardson estimate alongside.
RsSumResult rs_sum(const GridFunction& f, const GridFunction& g, double t);

/// Smallest n with |theta|^n / Gamma(alpha n + 1) < tol (capped at 100000).
int picard_iterations(double theta, double alpha, double tol);

/// Picard iteration X_{j+1} = x0 + theta I^alpha S_p X_j + g on the dyadic
/// grid; converges for every theta since the iterated-integral norms decay
/// like 1/Gamma(alpha n + 1). Independent route to the truncated equation's
/// solution, used to validate the assembled systems.
GridFunction volterra_picard(const VolterraProblem& prob, int p, int iters,
                             int grid_level);

/// The closed-form benchmark: with theta = Gamma(alpha+h+1)/Gamma(h+1) and
/// g(t) = t^h (1 - t^alpha), the solution of the Volterra equation is t^h.
struct LangevinBenchmark {
  double hurst = 0.0;
  double alpha = 0.0;
  double theta = 0.0;

  double g(double t) const;
  double x_exact(double t) const;
  HolderExpansion g_expansion(int depth) const;
  VolterraProblem problem(int g_depth) const;
};
LangevinBenchmark exact_langevin(double h, double alpha);

/// Exact solution of the linear RS equation: t -> x0 exp(beta t + gamma g(t)).
std::function<double(double)> exact_linear(double x0, double beta, double gamma,
                                           std::function<double(double)> g);

/// Tanh-sinh (double exponential) quadrature over (a, b); handles integrable
/// endpoint singularities. Verification-only helper.
double integrate_de(const std::function<double(double)>& f, double a, double b,
                    double eps = 1e-12);

}  // namespace tlfrac
