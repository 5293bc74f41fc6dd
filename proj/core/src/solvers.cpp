#include "tlfrac/solvers.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kernels_detail.hpp"
#include "tlfrac/errors.hpp"
#include "tlfrac/fraccalc.hpp"
#include "tlfrac/gamma.hpp"
#include "tlfrac/numfmt.hpp"
#include "tlfrac/stieltjes.hpp"

namespace tlfrac {

namespace {

std::int64_t pow2i(int e) { return std::int64_t{1} << e; }

// Per-level lookup tables of tau^{order}_{1,2^n+l} on the dyadic grid of
// level G. Scale invariance reduces every level to the unit kernel:
// tau^{order}_{1,2^n+l}(j/2^G) = 2^{-n order} psi_order((j - l 2^{G-n}) / 2^{G-n}),
// so one table of 2^G+1 entries per level covers all shifts.
class KernelTable {
 public:
  KernelTable(double order, int levels, int grid_level)
      : grid_level_(grid_level), tab_(static_cast<std::size_t>(levels) + 1) {
    if (levels >= grid_level) throw std::invalid_argument("KernelTable: needs levels < grid_level");
    const double inv_g = 1.0 / gamma_fn(1.0 + order);
    const std::int64_t n_pts = pow2i(grid_level);
    for (int n = 0; n <= levels; ++n) {
      const double scale = std::exp2(-n * order);
      const double step = std::exp2(n - grid_level);
      auto& row = tab_[static_cast<std::size_t>(n)];
      row.resize(static_cast<std::size_t>(n_pts) + 1);
      for (std::int64_t i = 0; i <= n_pts; ++i) {
        row[static_cast<std::size_t>(i)] =
            scale * detail::psi_left(order, static_cast<double>(i) * step, inv_g);
      }
    }
  }

  int grid_level() const { return grid_level_; }

  // tau^{order}_{1,2^n+l} at grid index j.
  double tau(int n, std::int64_t l, std::int64_t j) const {
    const std::int64_t i = j - (l << (grid_level_ - n));
    if (i <= 0) return 0.0;
    return tab_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  }

  const std::vector<double>& level(int n) const { return tab_[static_cast<std::size_t>(n)]; }

 private:
  int grid_level_;
  std::vector<std::vector<double>> tab_;
};

std::vector<std::vector<double>> pack_levels(const std::vector<double>& c, int p) {
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(p) + 1);
  for (int m = 0; m <= p; ++m) {
    auto& lvl = levels[static_cast<std::size_t>(m)];
    lvl.resize(std::size_t{1} << m);
    for (std::int64_t k = 0; k < pow2i(m); ++k) {
      lvl[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(pow2i(m) + k)];
    }
  }
  return levels;
}

// ---- Volterra system -----------------------------------------------------

// Row n = 2^m+k of the Volterra fixed-point map; the same formulas fill the
// assembled matrix (m <= p) and the explicit extension rows (m > p).
void volterra_row(const VolterraProblem& prob, int p, const KernelTable& table,
                  int m, std::int64_t k, double* arow, double& brow) {
  const int G = table.grid_level();
  const std::int64_t jlo = k << (G - m);
  const std::int64_t jmid = jlo + pow2i(G - m - 1);
  const std::int64_t jhi = jlo + pow2i(G - m);
  const double h = prob.hurst;
  const double s2mH = std::exp2(m * h);
  const DyadicIndex row{m, k};
  const double t2a = tau2(1.0 + prob.alpha, row, 0.0, 1.0);
  brow = prob.g.coeff(m, k) +
         s2mH * prob.theta * prob.x0 * (tau2(prob.alpha, row, 0.0, 1.0) - t2a);
  arow[0] = s2mH * prob.theta * t2a;
  std::size_t col = 1;
  for (int n = 0; n <= p; ++n) {
    const double w = -prob.theta * std::exp2(m * h + n * (1.0 - h));
    for (std::int64_t l = 0; l < pow2i(n); ++l, ++col) {
      arow[col] =
          w * (table.tau(n, l, jlo) - 2.0 * table.tau(n, l, jmid) + table.tau(n, l, jhi));
    }
  }
}

// ---- Linear RS system ----------------------------------------------------

struct LinearContext {
  const LinearRSProblem& prob;
  int p;
  const KernelTable& table;  // tau^2 at the working grid
  double sg1;                // sum 2^{-n2(1+H)-2} c^g = I1 (S_p g)(1)
};

double sum_sg1(const HolderExpansion& g, int p) {
  double acc = 0.0;
  for (int n = 0; n <= p; ++n) {
    double lvl = 0.0;
    for (std::int64_t l = 0; l < pow2i(n); ++l) lvl += g.coeff(n, l);
    acc += std::exp2(-n * (1.0 + g.hurst()) - 2.0) * lvl;
  }
  return acc;
}

// Row n = 2^m+k of the linear fixed-point map. For extension rows (m > p)
// the driver coefficient c^g_{m,k} is replaced by zero: the truncated
// equation only sees S_p g.
void linear_row(const LinearContext& ctx, int m, std::int64_t k, double* arow,
                double& brow) {
  const LinearRSProblem& prob = ctx.prob;
  const int p = ctx.p;
  const KernelTable& T = ctx.table;
  const int G = T.grid_level();
  const double h = prob.hurst;
  const HolderExpansion& g = prob.g;

  const std::int64_t jt0 = k << (G - m);
  const std::int64_t jt1 = jt0 + pow2i(G - m - 1);
  const std::int64_t jt2 = jt0 + pow2i(G - m);
  const DyadicIndex row{m, k};
  const double cg_row = (m <= p) ? g.coeff(m, k) : 0.0;
  const double s2mH = std::exp2(m * h);

  // x1 column: moment-integral constants of d(S_p g) against the row triple.
  double dsum = 0.0;
  for (int n2 = 0; n2 <= p; ++n2) {
    const double w = std::exp2(n2 * (0.5 - h));
    const double amp = std::sqrt(std::exp2(n2));
    const double inv2m = std::exp2(-m);
    for (std::int64_t l2 = 0; l2 < pow2i(n2); ++l2) {
      const double cg = g.coeff(n2, l2);
      if (cg == 0.0) continue;
      const DyadicIndex nl{n2, l2};
      const double dconst =
          inv2m * schauder_eval(nl, row.mid()) - inv2m * schauder_eval(nl, row.right()) +
          amp * (T.tau(n2, l2, jt0) - 2.0 * T.tau(n2, l2, jt1) + T.tau(n2, l2, jt2));
      dsum += w * cg * dconst;
    }
  }
  arow[0] = -prob.beta * std::exp2(m * (h - 2.0) - 2.0) +
            prob.gamma * (static_cast<double>(k) * cg_row * std::exp2(-m) + s2mH * dsum);
  brow = -prob.x0 * arow[0] + prob.gamma * prob.x0 * cg_row;

  std::size_t col = 1;
  for (int n = 0; n <= p; ++n) {
    const double wbeta = -prob.beta * std::exp2(m * h + n * (1.0 - h));
    for (std::int64_t l = 0; l < pow2i(n); ++l, ++col) {
      const double dd1 = T.tau(n, l, jt0) - 2.0 * T.tau(n, l, jt1) + T.tau(n, l, jt2);
      double ssum = 0.0;
      for (int n2 = 0; n2 <= p; ++n2) {
        const double w2 = std::exp2((n + n2) * (1.0 - h));
        double inner = 0.0;
        for (std::int64_t l2 = 0; l2 < pow2i(n2); ++l2) {
          const double cg = g.coeff(n2, l2);
          if (cg == 0.0) continue;
          const std::int64_t jq0 = l2 << (G - n2);
          const std::int64_t jq1 = jq0 + pow2i(G - n2 - 1);
          const std::int64_t jq2 = jq0 + pow2i(G - n2);
          // Delta^2 at the three row points, inner triple (n2,l2).
          const double d0 = T.tau(n, l, std::min(jt0, jq0)) -
                            2.0 * T.tau(n, l, std::min(jt0, jq1)) +
                            T.tau(n, l, std::min(jt0, jq2));
          const double d1 = T.tau(n, l, std::min(jt1, jq0)) -
                            2.0 * T.tau(n, l, std::min(jt1, jq1)) +
                            T.tau(n, l, std::min(jt1, jq2));
          const double d2 = T.tau(n, l, std::min(jt2, jq0)) -
                            2.0 * T.tau(n, l, std::min(jt2, jq1)) +
                            T.tau(n, l, std::min(jt2, jq2));
          inner += cg * (d0 - 2.0 * d1 + d2);
        }
        ssum += w2 * inner;
      }
      arow[col] = wbeta * dd1 + prob.gamma * s2mH * ssum;
    }
  }
}

void require_depth(const HolderExpansion& g, int depth, const char* who) {
  if (g.max_level() < depth) {
    throw std::invalid_argument(std::string(who) + ": driver expansion too shallow, need depth >= " +
                                std::to_string(depth));
  }
}

}  // namespace

VolterraProblem::VolterraProblem(double x0_, double theta_, double alpha_,
                                 HolderExpansion g_, double hurst_)
    : x0(x0_), theta(theta_), alpha(alpha_), g(std::move(g_)), hurst(hurst_) {
  if (!(hurst > 0.0 && hurst < alpha && alpha < 1.0)) {
    throw std::invalid_argument("VolterraProblem: requires 0 < hurst < alpha < 1");
  }
  if (theta == 0.0) throw std::invalid_argument("VolterraProblem: theta must be nonzero");
}

LinearRSProblem::LinearRSProblem(double x0_, double beta_, double gamma_, double alpha_,
                                 HolderExpansion g_, double hurst_)
    : x0(x0_), beta(beta_), gamma(gamma_), alpha(alpha_), g(std::move(g_)), hurst(hurst_) {
  if (!(hurst > 0.5)) throw std::invalid_argument("LinearRSProblem: requires hurst > 1/2");
  if (!(alpha > 1.0 - hurst && alpha < hurst)) {
    throw std::invalid_argument("LinearRSProblem: requires alpha in (1-hurst, hurst)");
  }
  if (beta == 0.0) throw std::invalid_argument("LinearRSProblem: beta must be nonzero");
  if (g.f0() != 0.0 || g.f1() != 0.0) {
    throw std::invalid_argument("LinearRSProblem: requires g(0) = g(1) = 0");
  }
}

LinearSystem assemble_volterra(const VolterraProblem& prob, int p) {
  if (p < 1) throw std::invalid_argument("assemble_volterra: requires p >= 1");
  require_depth(prob.g, p, "assemble_volterra");
  const std::size_t dim = static_cast<std::size_t>(pow2i(p + 1));
  LinearSystem sys{p, dim, std::vector<double>(dim * dim, 0.0), std::vector<double>(dim, 0.0)};
  const KernelTable table(1.0 + prob.alpha, p, p + 1);
  const double h = prob.hurst;

  sys.b[0] = prob.x0 + prob.g.f1() +
             prob.theta * prob.x0 * (1.0 / gamma_fn(1.0 + prob.alpha) - 1.0 / gamma_fn(2.0 + prob.alpha));
  sys.at(0, 0) = prob.theta / gamma_fn(2.0 + prob.alpha);
  {
    std::size_t col = 1;
    const std::int64_t jend = pow2i(p + 1);
    for (int n = 0; n <= p; ++n) {
      const double w = prob.theta * std::exp2(n * (1.0 - h));
      for (std::int64_t l = 0; l < pow2i(n); ++l, ++col) {
        sys.at(0, col) = w * table.tau(n, l, jend);
      }
    }
  }
  for (int m = 0; m <= p; ++m) {
    for (std::int64_t k = 0; k < pow2i(m); ++k) {
      const std::size_t r = static_cast<std::size_t>(pow2i(m) + k);
      volterra_row(prob, p, table, m, k, &sys.a[r * dim], sys.b[r]);
    }
  }
  return sys;
}

LinearSystem assemble_linear(const LinearRSProblem& prob, int p) {
  if (p < 1) throw std::invalid_argument("assemble_linear: requires p >= 1");
  require_depth(prob.g, p, "assemble_linear");
  const std::size_t dim = static_cast<std::size_t>(pow2i(p + 1));
  LinearSystem sys{p, dim, std::vector<double>(dim * dim, 0.0), std::vector<double>(dim, 0.0)};
  const KernelTable table(2.0, p, p + 1);
  const LinearContext ctx{prob, p, table, sum_sg1(prob.g, p)};
  const double h = prob.hurst;

  // The value equation at t = 1 keeps the bare x0 alongside the beta/gamma
  // moments (the fixed-point proof's grouping, which the displayed b_0 drops).
  sys.b[0] = prob.x0 + prob.beta * prob.x0 / 2.0 + prob.gamma * prob.x0 * ctx.sg1;
  sys.at(0, 0) = prob.beta / 2.0 - prob.gamma * ctx.sg1;
  {
    std::size_t col = 1;
    for (int n = 0; n <= p; ++n) {
      for (std::int64_t l = 0; l < pow2i(n); ++l, ++col) {
        double ssum = 0.0;
        for (int n2 = 0; n2 <= p; ++n2) {
          const double w2 = std::exp2((n + n2) * (1.0 - h));
          double inner = 0.0;
          for (std::int64_t l2 = 0; l2 < pow2i(n2); ++l2) {
            const double cg = prob.g.coeff(n2, l2);
            if (cg == 0.0) continue;
            const std::int64_t jq0 = l2 << (p + 1 - n2);
            const std::int64_t jq1 = jq0 + pow2i(p - n2);
            const std::int64_t jq2 = jq0 + pow2i(p + 1 - n2);
            inner += cg * (table.tau(n, l, jq0) - 2.0 * table.tau(n, l, jq1) +
                           table.tau(n, l, jq2));
          }
          ssum += w2 * inner;
        }
        sys.at(0, col) = prob.beta * std::exp2(-n * (h + 1.0) - 2.0) - prob.gamma * ssum;
      }
    }
  }
  for (int m = 0; m <= p; ++m) {
    for (std::int64_t k = 0; k < pow2i(m); ++k) {
      const std::size_t r = static_cast<std::size_t>(pow2i(m) + k);
      linear_row(ctx, m, k, &sys.a[r * dim], sys.b[r]);
    }
  }
  return sys;
}

std::vector<double> solve_fixed_point(const LinearSystem& sys) {
  const auto n = static_cast<Eigen::Index>(sys.dim);
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      a(sys.a.data(), n, n);
  Eigen::Map<const Eigen::VectorXd> b(sys.b.data(), n);
  Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - a;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(std::move(lhs));
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pivot_max = pivots.maxCoeff();
  const double pivot_min = pivots.minCoeff();
  if (!(pivot_min > 1e-13 * pivot_max)) {
    throw solver_error("solve_fixed_point: numerically singular system (|pivot| min/max = " +
                       format_shortest(pivot_min) + "/" + format_shortest(pivot_max) + ")");
  }
  Eigen::VectorXd c = lu.solve(b);
  const double residual = (c - (a * c + b)).cwiseAbs().maxCoeff();
  const double allowed = 1e-10 * (1.0 + b.cwiseAbs().maxCoeff());
  if (!(residual <= allowed)) {
    throw solver_error("solve_fixed_point: fixed-point residual " + format_shortest(residual) +
                       " exceeds " + format_shortest(allowed));
  }
  return std::vector<double>(c.data(), c.data() + sys.dim);
}

std::vector<std::vector<double>> extend_volterra_coeffs(const VolterraProblem& prob,
                                                        int p,
                                                        const std::vector<double>& c,
                                                        int to_level) {
  if (to_level < p) throw std::invalid_argument("extend_volterra_coeffs: to_level < p");
  if (c.size() != static_cast<std::size_t>(pow2i(p + 1))) {
    throw std::invalid_argument("extend_volterra_coeffs: solution size mismatch");
  }
  require_depth(prob.g, to_level, "extend_volterra_coeffs");
  auto levels = pack_levels(c, p);
  if (to_level == p) return levels;
  levels.resize(static_cast<std::size_t>(to_level) + 1);
  const KernelTable table(1.0 + prob.alpha, p, to_level + 1);
  std::vector<double> arow(c.size());
  for (int m = p + 1; m <= to_level; ++m) {
    auto& lvl = levels[static_cast<std::size_t>(m)];
    lvl.resize(std::size_t{1} << m);
    for (std::int64_t k = 0; k < pow2i(m); ++k) {
      double brow = 0.0;
      volterra_row(prob, p, table, m, k, arow.data(), brow);
      double acc = brow;
      for (std::size_t j = 0; j < c.size(); ++j) acc += arow[j] * c[j];
      lvl[static_cast<std::size_t>(k)] = acc;
    }
  }
  return levels;
}

std::vector<std::vector<double>> extend_linear_coeffs(const LinearRSProblem& prob,
                                                      int p,
                                                      const std::vector<double>& c,
                                                      int to_level) {
  if (to_level < p) throw std::invalid_argument("extend_linear_coeffs: to_level < p");
  if (c.size() != static_cast<std::size_t>(pow2i(p + 1))) {
    throw std::invalid_argument("extend_linear_coeffs: solution size mismatch");
  }
  require_depth(prob.g, p, "extend_linear_coeffs");
  auto levels = pack_levels(c, p);
  if (to_level == p) return levels;
  levels.resize(static_cast<std::size_t>(to_level) + 1);
  const KernelTable table(2.0, p, to_level + 1);
  const LinearContext ctx{prob, p, table, sum_sg1(prob.g, p)};
  std::vector<double> arow(c.size());
  for (int m = p + 1; m <= to_level; ++m) {
    auto& lvl = levels[static_cast<std::size_t>(m)];
    lvl.resize(std::size_t{1} << m);
    for (std::int64_t k = 0; k < pow2i(m); ++k) {
      double brow = 0.0;
      linear_row(ctx, m, k, arow.data(), brow);
      double acc = brow;
      for (std::size_t j = 0; j < c.size(); ++j) acc += arow[j] * c[j];
      lvl[static_cast<std::size_t>(k)] = acc;
    }
  }
  return levels;
}

TruncatedSolution solve_volterra(const VolterraProblem& prob, int p, int ext) {
  if (ext < p) throw std::invalid_argument("solve_volterra: ext must be >= p");
  const LinearSystem sys = assemble_volterra(prob, p);
  const std::vector<double> c = solve_fixed_point(sys);
  auto levels = extend_volterra_coeffs(prob, p, c, ext);
  HolderExpansion x(prob.hurst, prob.x0, c[0], std::move(levels));
  return TruncatedSolution{std::move(x), c[0], p};
}

TruncatedSolution solve_volterra(const VolterraProblem& prob, int p) {
  return solve_volterra(prob, p, p);
}

TruncatedSolution solve_linear_rs(const LinearRSProblem& prob, int p, int ext) {
  if (ext < p) throw std::invalid_argument("solve_linear_rs: ext must be >= p");
  const LinearSystem sys = assemble_linear(prob, p);
  const std::vector<double> c = solve_fixed_point(sys);
  auto levels = extend_linear_coeffs(prob, p, c, ext);
  HolderExpansion x(prob.hurst, prob.x0, c[0], std::move(levels));
  return TruncatedSolution{std::move(x), c[0], p};
}

TruncatedSolution solve_linear_rs(const LinearRSProblem& prob, int p) {
  return solve_linear_rs(prob, p, p);
}

double volterra_residual_sup(const VolterraProblem& prob, const TruncatedSolution& sol,
                             int grid_level) {
  const int p = sol.system_level;
  const std::int64_t n = pow2i(grid_level);
  double worst = 0.0;
  for (std::int64_t j = 0; j <= n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    const double lhs = sol.expansion.value(t);
    const double rhs = prob.x0 +
                       prob.theta * frac_integral_expansion(sol.expansion, prob.alpha, t, p) +
                       prob.g.value(t);
    worst = std::fmax(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

double linear_residual_sup(const LinearRSProblem& prob, const TruncatedSolution& sol,
                           int grid_level) {
  const int p = sol.system_level;
  const HolderExpansion xs = sol.expansion.truncated(p);
  const HolderExpansion gs = prob.g.truncated(p);
  const std::vector<double> rs = rs_values(xs, gs, grid_level);
  const std::int64_t n = pow2i(grid_level);
  double worst = 0.0;
  for (std::int64_t j = 0; j <= n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    const double lhs = sol.expansion.value(t);
    const double rhs = prob.x0 + prob.beta * frac_integral_expansion(sol.expansion, 1.0, t, p) +
                       prob.gamma * rs[static_cast<std::size_t>(j)];
    worst = std::fmax(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

std::vector<double> volterra_solution_values(const VolterraProblem& prob,
                                             const TruncatedSolution& sol,
                                             int grid_level) {
  const int p = sol.system_level;
  if (grid_level <= p) throw std::invalid_argument("volterra_solution_values: grid_level must exceed p");
  const std::int64_t n = pow2i(grid_level);
  const KernelTable table(1.0 + prob.alpha, p, grid_level);
  std::vector<double> wave(static_cast<std::size_t>(n) + 1, 0.0);
  for (int lvl = 0; lvl <= p; ++lvl) {
    const double w = std::exp2(lvl * (1.0 - prob.hurst));
    const auto& tab = table.level(lvl);
    for (std::int64_t k = 0; k < pow2i(lvl); ++k) {
      const double wc = w * sol.expansion.coeff(lvl, k);
      if (wc == 0.0) continue;
      const std::int64_t base = k << (grid_level - lvl);
      for (std::int64_t j = base + 1; j <= n; ++j) {
        wave[static_cast<std::size_t>(j)] += wc * tab[static_cast<std::size_t>(j - base)];
      }
    }
  }
  const double inv_g1 = 1.0 / gamma_fn(1.0 + prob.alpha);
  const double inv_g2 = 1.0 / gamma_fn(2.0 + prob.alpha);
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j <= n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    const double affine = prob.x0 * std::pow(t, prob.alpha) * inv_g1 +
                          (sol.x1 - prob.x0) * std::pow(t, 1.0 + prob.alpha) * inv_g2;
    out[static_cast<std::size_t>(j)] =
        prob.x0 + prob.theta * (affine + wave[static_cast<std::size_t>(j)]) + prob.g.value(t);
  }
  return out;
}

std::vector<double> linear_solution_values(const LinearRSProblem& prob,
                                           const TruncatedSolution& sol,
                                           int grid_level) {
  const int p = sol.system_level;
  if (grid_level <= p) throw std::invalid_argument("linear_solution_values: grid_level must exceed p");
  const HolderExpansion xs = sol.expansion.truncated(p);
  const HolderExpansion gs = prob.g.truncated(p);
  const std::vector<double> rs = rs_values(xs, gs, grid_level);
  const std::int64_t n = pow2i(grid_level);
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  double acc = 0.0;  // cumulative trapezoid of S_p X_p, exact on this grid
  double prev = xs.value(0.0);
  out[0] = prob.x0;
  const double dt = 1.0 / static_cast<double>(n);
  for (std::int64_t j = 1; j <= n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    const double cur = xs.value(t);
    acc += 0.5 * (prev + cur) * dt;
    prev = cur;
    out[static_cast<std::size_t>(j)] =
        prob.x0 + prob.beta * acc + prob.gamma * rs[static_cast<std::size_t>(j)];
  }
  return out;
}

void write_system_dump(const LinearSystem& sys, const std::string& kind,
                       const std::string& parameters_json, std::ostream& out) {
  out << "{\"p\":" << sys.p << ",\"P\":" << (sys.dim - 1) << ",\"kind\":\"" << kind
      << "\",\"parameters\":" << (parameters_json.empty() ? "{}" : parameters_json) << "}\n";
  out << "row,col,value\n";
  for (std::size_t r = 0; r < sys.dim; ++r) {
    for (std::size_t c = 0; c < sys.dim; ++c) {
      out << r << ',' << c << ',' << format_shortest(sys.at(r, c)) << '\n';
    }
  }
  for (std::size_t r = 0; r < sys.dim; ++r) {
    out << r << ",-1," << format_shortest(sys.b[r]) << '\n';
  }
}

}  // namespace tlfrac
