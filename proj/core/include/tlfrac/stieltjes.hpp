#pragma once

#include <vector>

#include "tlfrac/dyadic.hpp"

namespace tlfrac {

/// Second difference of the left kernel over an inner dyadic triple,
///   Delta^a_{2^m+k,2^n+l}(t) = tau^a_1(t ^ l/2^n) - 2 tau^a_1(t ^ (l+0.5)/2^n)
///                              + tau^a_1(t ^ (l+1)/2^n),
/// where tau carries the outer index (m,k) and x ^ y = min(x,y). Any order
/// a > 0; the solvers need 1+alpha and the Riemann-Stieltjes series needs 2.
double delta_kernel(double order, DyadicIndex outer, DyadicIndex inner, double t);

/// delta_kernel with order 2, the building block of the series integral.
double delta2(DyadicIndex outer, DyadicIndex inner, double t);

/// D_{2^n+l,2^m+k} = e_{n,l}((k+0.5)/2^m)/2^m - e_{n,l}((k+1)/2^m)/2^m
///                   + 2^{n/2} Delta^2_{2^n+l,2^m+k}(1),
/// the constant entering the expansion of the moment integral of dg.
double d_constant(DyadicIndex nl, DyadicIndex mk);

/// Riemann-Stieltjes integral of f against g on [0, t] for Hoelder exponents
/// with f.hurst + g.hurst > 1 (throws std::invalid_argument otherwise).
/// Writing f = f0 + (f1-f0) s + y_f and g = g0 + (g1-g0) s + y_g:
///
///   f0 (g(t)-g(0)) + (f1-f0) (t g(t) - I1 g(t)) + (g1-g0) I1 y_f(t)
///     - sum 2^{m(1-H1)+n(1-H2)} c^f_{m,k} c^g_{n,l} Delta^2_{2^m+k,2^n+l}(t),
///
/// with the double series truncated at levels (pf, pg) and everything else
/// taken at full stored depth.
double rs_integral(const HolderExpansion& f, const HolderExpansion& g, double t,
                   int pf, int pg);
/// Defaults pf = pg = min of the stored depths.
double rs_integral(const HolderExpansion& f, const HolderExpansion& g, double t);

/// Expansion of R(t) = int_0^t f dg in g's Hoelder class: R(0) = 0, R(1) from
/// the series, and the level coefficients extracted as second differences of
/// rs_integral at the dyadic triples (equivalent to the closed-form
/// coefficient series, and cheaper).
HolderExpansion rs_integral_coeffs(const HolderExpansion& f,
                                   const HolderExpansion& g, int p);

/// Closed-form coefficient of the series part only (both affine parts
/// ignored): the quadruple sum over Delta^2 second differences. Slow; kept as
/// a cross-check of rs_integral_coeffs for shallow inputs.
double rs_coeff_series(const HolderExpansion& f, const HolderExpansion& g,
                       DyadicIndex mk, int pf, int pg);

/// Values of rs_integral(f, g, j/2^G) for j = 0..2^G in one sweep. Both
/// integrands are piecewise linear at their stored resolution, so the
/// cumulative cell-by-cell product rule is exact; this is the fast path used
/// by the equation solvers' grid evaluations.
std::vector<double> rs_values(const HolderExpansion& f, const HolderExpansion& g,
                              int grid_level);

}  // namespace tlfrac
