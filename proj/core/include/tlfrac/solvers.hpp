#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tlfrac/dyadic.hpp"

namespace tlfrac {

/// X(t) = x0 + theta I_{0+}^alpha X(t) + g(t) on [0,1], with the solution
/// sought in the Hoelder class of exponent hurst. Requires hurst < alpha < 1
/// and theta != 0.
struct VolterraProblem {
  double x0;
  double theta;
  double alpha;
  HolderExpansion g;
  double hurst;

  VolterraProblem(double x0, double theta, double alpha, HolderExpansion g,
                  double hurst);
};

/// X(t) = x0 + beta int_0^t X + gamma int_0^t X dg on [0,1], with g(0) =
/// g(1) = 0, hurst > 1/2 and alpha in (1-hurst, hurst). beta must be nonzero;
/// gamma = 0 is accepted and reduces the problem to the ordinary linear ODE.
struct LinearRSProblem {
  double x0;
  double beta;
  double gamma;
  double alpha;
  HolderExpansion g;
  double hurst;

  LinearRSProblem(double x0, double beta, double gamma, double alpha,
                  HolderExpansion g, double hurst);
};

/// Dense system for the fixed-point form C = A C + b. Row/column 0 carries
/// x1; row/column n = 2^m + k (1 <= n <= P, P = 2^{p+1}-1) carries c_{m,k}.
struct LinearSystem {
  int p = 0;
  std::size_t dim = 0;
  std::vector<double> a;  // row-major dim x dim
  std::vector<double> b;

  double& at(std::size_t row, std::size_t col) { return a[row * dim + col]; }
  double at(std::size_t row, std::size_t col) const { return a[row * dim + col]; }
};

/// Solution of a truncated equation: the expansion holds levels up to the
/// extension depth, f0 = x0 and f1 = x1 = X_p(1).
struct TruncatedSolution {
  HolderExpansion expansion;
  double x1 = 0.0;
  int system_level = 0;
};

/// Assemble the truncated Volterra system at level p (g must be stored at
/// least to depth p; deeper coefficients are deliberately ignored here).
LinearSystem assemble_volterra(const VolterraProblem& prob, int p);

/// Assemble the truncated linear RS system at level p.
LinearSystem assemble_linear(const LinearRSProblem& prob, int p);

/// Solve C = A C + b by dense LU with partial pivoting on I - A.
/// Deterministic; throws solver_error when a pivot falls below 1e-13 times
/// the pivot scale, or when the fixed-point residual exceeds
/// 1e-10 (1 + |b|_inf).
std::vector<double> solve_fixed_point(const LinearSystem& sys);

/// Coefficients of the solved system extended explicitly (no solve) to
/// levels p+1..to_level by one application of the fixed-point row formulas.
/// Returns all levels 0..to_level; rows at or below p are taken from c.
std::vector<std::vector<double>> extend_volterra_coeffs(const VolterraProblem& prob,
                                                        int p,
                                                        const std::vector<double>& c,
                                                        int to_level);
std::vector<std::vector<double>> extend_linear_coeffs(const LinearRSProblem& prob,
                                                      int p,
                                                      const std::vector<double>& c,
                                                      int to_level);

TruncatedSolution solve_volterra(const VolterraProblem& prob, int p, int ext);
TruncatedSolution solve_volterra(const VolterraProblem& prob, int p);
TruncatedSolution solve_linear_rs(const LinearRSProblem& prob, int p, int ext);
TruncatedSolution solve_linear_rs(const LinearRSProblem& prob, int p);

/// Max over the dyadic grid of |X_p(t) - x0 - theta [I^a S_p X_p](t) - g(t)|,
/// the residual of the truncated equation with the right-hand operator
/// evaluated through the closed-form series. Exact only when the stored
/// extension reaches grid_level - 1.
double volterra_residual_sup(const VolterraProblem& prob, const TruncatedSolution& sol,
                             int grid_level);

/// Same for the linear equation: |X_p - x0 - beta I1 S_p X_p -
/// gamma int S_p X_p d(S_p g)|, the RS term evaluated through the stieltjes
/// module's cumulative path.
double linear_residual_sup(const LinearRSProblem& prob, const TruncatedSolution& sol,
                           int grid_level);

/// Exact values of X_p at j/2^G computed from the defining identity
/// X_p = x0 + theta I^a S_p X_p + g, which carries the full coefficient tail
/// implicitly (no extension needed).
std::vector<double> volterra_solution_values(const VolterraProblem& prob,
                                             const TruncatedSolution& sol,
                                             int grid_level);

/// Exact values of X_p = x0 + beta I1 S_p X_p + gamma int S_p X_p d(S_p g) at
/// j/2^G; both integrands are piecewise linear, so the cumulative sweep is
/// exact for grid_level > p.
std::vector<double> linear_solution_values(const LinearRSProblem& prob,
                                           const TruncatedSolution& sol,
                                           int grid_level);

/// Debug dump: one JSON header line {"p": .., "P": .., "kind": ..,
/// "parameters": ..} followed by RFC-4180 CSV triplets row,col,value for A
/// and, with col = -1, the entries of b.
void write_system_dump(const LinearSystem& sys, const std::string& kind,
                       const std::string& parameters_json, std::ostream& out);

}  // namespace tlfrac
