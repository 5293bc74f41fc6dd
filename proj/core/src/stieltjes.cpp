#include "tlfrac/stieltjes.hpp"

#include <cmath>
#include <stdexcept>

#include "tlfrac/fraccalc.hpp"

namespace tlfrac {

namespace {

void require_young(const HolderExpansion& f, const HolderExpansion& g) {
  if (!(f.hurst() + g.hurst() > 1.0)) {
    throw std::invalid_argument("rs_integral: requires f.hurst + g.hurst > 1");
  }
}

// I1 of the full expansion (affine part included), closed form.
double primitive(const HolderExpansion& x, double t) {
  return frac_integral_expansion(x, 1.0, t, x.max_level());
}

// I1 of the wavelet part of x alone.
double primitive_wavelet(const HolderExpansion& x, double t) {
  double acc = 0.0;
  for (int m = 0; m <= x.max_level(); ++m) {
    const double weight = std::exp2(m * (1.0 - x.hurst()));
    const auto lvl = x.level(m);
    double level_sum = 0.0;
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(lvl.size()); ++k) {
      const double tk = tau1(2.0, DyadicIndex{m, k}, t);
      if (tk != 0.0) level_sum += lvl[static_cast<std::size_t>(k)] * tk;
    }
    acc += weight * level_sum;
  }
  return acc;
}

double series_part(const HolderExpansion& f, const HolderExpansion& g, double t,
                   int pf, int pg) {
  const double h1 = f.hurst();
  const double h2 = g.hurst();
  double acc = 0.0;
  for (int m = 0; m <= std::min(pf, f.max_level()); ++m) {
    const auto flvl = f.level(m);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(flvl.size()); ++k) {
      const double cf = flvl[static_cast<std::size_t>(k)];
      if (cf == 0.0) continue;
      const DyadicIndex fi{m, k};
      for (int n = 0; n <= std::min(pg, g.max_level()); ++n) {
        const auto glvl = g.level(n);
        const double weight = std::exp2(m * (1.0 - h1) + n * (1.0 - h2));
        double inner = 0.0;
        for (std::int64_t l = 0; l < static_cast<std::int64_t>(glvl.size()); ++l) {
          const double cg = glvl[static_cast<std::size_t>(l)];
          if (cg == 0.0) continue;
          inner += cg * delta2(fi, DyadicIndex{n, l}, t);
        }
        acc -= weight * cf * inner;
      }
    }
  }
  return acc;
}

}  // namespace

double delta_kernel(double order, DyadicIndex outer, DyadicIndex inner, double t) {
  if (!inner.valid()) throw std::domain_error("delta_kernel: invalid inner index");
  const double u0 = std::fmin(t, inner.left());
  const double u1 = std::fmin(t, inner.mid());
  const double u2 = std::fmin(t, inner.right());
  return tau1(order, outer, u0) - 2.0 * tau1(order, outer, u1) + tau1(order, outer, u2);
}

double delta2(DyadicIndex outer, DyadicIndex inner, double t) {
  return delta_kernel(2.0, outer, inner, t);
}

double d_constant(DyadicIndex nl, DyadicIndex mk) {
  if (!mk.valid()) throw std::domain_error("d_constant: invalid index");
  const double inv2m = std::exp2(-mk.m);
  return inv2m * schauder_eval(nl, mk.mid()) - inv2m * schauder_eval(nl, mk.right()) +
         std::sqrt(std::exp2(nl.m)) * delta2(nl, mk, 1.0);
}

double rs_integral(const HolderExpansion& f, const HolderExpansion& g, double t,
                   int pf, int pg) {
  require_young(f, g);
  const double gt = g.value(t);
  double acc = f.f0() * (gt - g.f0());
  const double slope_f = f.f1() - f.f0();
  if (slope_f != 0.0) acc += slope_f * (t * gt - primitive(g, t));
  const double slope_g = g.f1() - g.f0();
  if (slope_g != 0.0) acc += slope_g * primitive_wavelet(f, t);
  acc += series_part(f, g, t, pf, pg);
  return acc;
}

double rs_integral(const HolderExpansion& f, const HolderExpansion& g, double t) {
  const int p = std::min(f.max_level(), g.max_level());
  return rs_integral(f, g, t, p, p);
}

HolderExpansion rs_integral_coeffs(const HolderExpansion& f,
                                   const HolderExpansion& g, int p) {
  require_young(f, g);
  const double h2 = g.hurst();
  const int pf = f.max_level();
  const int pg = g.max_level();
  const double r1 = rs_integral(f, g, 1.0, pf, pg);
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(p) + 1);
  for (int m = 0; m <= p; ++m) {
    auto& lvl = levels[static_cast<std::size_t>(m)];
    lvl.resize(std::size_t{1} << m);
    const double scale = std::exp2(m * h2);
    for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k) {
      const DyadicIndex mk{m, k};
      const double lo = rs_integral(f, g, mk.left(), pf, pg);
      const double mid = rs_integral(f, g, mk.mid(), pf, pg);
      const double hi = rs_integral(f, g, mk.right(), pf, pg);
      lvl[static_cast<std::size_t>(k)] = scale * (2.0 * mid - hi - lo);
    }
  }
  return HolderExpansion(h2, 0.0, r1, std::move(levels));
}

double rs_coeff_series(const HolderExpansion& f, const HolderExpansion& g,
                       DyadicIndex mk, int pf, int pg) {
  require_young(f, g);
  const double h1 = f.hurst();
  const double h2 = g.hurst();
  double acc = 0.0;
  for (int n1 = 0; n1 <= std::min(pf, f.max_level()); ++n1) {
    for (std::int64_t l1 = 0; l1 < (std::int64_t{1} << n1); ++l1) {
      const double cf = f.coeff(n1, l1);
      if (cf == 0.0) continue;
      const DyadicIndex fi{n1, l1};
      for (int n2 = 0; n2 <= std::min(pg, g.max_level()); ++n2) {
        const double weight = std::exp2(n1 * (1.0 - h1) + n2 * (1.0 - h2) + mk.m * h2);
        for (std::int64_t l2 = 0; l2 < (std::int64_t{1} << n2); ++l2) {
          const double cg = g.coeff(n2, l2);
          if (cg == 0.0) continue;
          const DyadicIndex gi{n2, l2};
          const double dd = delta2(fi, gi, mk.left()) - 2.0 * delta2(fi, gi, mk.mid()) +
                            delta2(fi, gi, mk.right());
          acc += weight * cf * cg * dd;
        }
      }
    }
  }
  return acc;
}

std::vector<double> rs_values(const HolderExpansion& f, const HolderExpansion& g,
                              int grid_level) {
  require_young(f, g);
  const std::int64_t n = std::int64_t{1} << grid_level;
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  out[0] = 0.0;
  double fprev = f.value(0.0);
  double gprev = g.value(0.0);
  double acc = 0.0;
  for (std::int64_t j = 1; j <= n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    const double fj = f.value(t);
    const double gj = g.value(t);
    // Exact once the grid refines both stored resolutions: f linear and g
    // linear on the cell make the product rule a trapezoid in f.
    acc += 0.5 * (fprev + fj) * (gj - gprev);
    out[static_cast<std::size_t>(j)] = acc;
    fprev = fj;
    gprev = gj;
  }
  return out;
}

}  // namespace tlfrac
