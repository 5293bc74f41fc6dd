#pragma once

#include <cstdint>
#include <vector>

#include "tlfrac/dyadic.hpp"

namespace tlfrac {

/// Fractional Gaussian noise covariance
///   C_H(t) = ( |t+1|^{2H} - 2 |t|^{2H} + |t-1|^{2H} ) / 2,  h in (0,1].
/// (h = 1 is the degenerate quadratic case the order-2 kernels reduce to.)
/// For h < 1/2 it is negative and increasing on [1, inf). Large |t| is
/// evaluated through expm1/log1p so the second difference keeps full
/// relative accuracy.
double fgn_covariance(double h, double t);

/// Left kernel
///   tau^a_{1,2^m+k}(t) = [ (t-k/2^m)_+^a - 2 (t-(k+0.5)/2^m)_+^a
///                          + (t-(k+1)/2^m)_+^a ] / Gamma(1+a),
/// so that I_{0+}^a H_{m,k} = 2^{m/2} tau^a_1. Once t passes the support
/// ((k+1)/2^m <= t) the equivalent covariance form
/// 2^{1-a} 2^{-ma} C_{a/2}(2^{m+1} t - 2k - 1) / Gamma(1+a) is used, which
/// subtracts comparable magnitudes once instead of twice. Requires a > 0.
double tau1(double alpha, DyadicIndex idx, double t);

/// Right kernel
///   tau^a_{2,2^m+k}(t,T) = [ 2 (T ^ (k+0.5)/2^m - t)_+^a
///                            - (T ^ k/2^m - t)_+^a
///                            - (T ^ (k+1)/2^m - t)_+^a ] / Gamma(1+a)
/// with x ^ y = min(x,y), so that I_{T-}^a H_{m,k} = 2^{m/2} tau^a_2.
/// Requires a > 0 and t <= T.
double tau2(double alpha, DyadicIndex idx, double t, double T);

// Fractional integrals and derivatives of single basis functions, all in
// closed form. Orders: integrals take alpha > 0, derivatives alpha in (0,1).
double frac_integral_haar_left(double alpha, DyadicIndex idx, double t);
double frac_integral_haar_right(double alpha, DyadicIndex idx, double t, double T);
double frac_integral_schauder_left(double alpha, DyadicIndex idx, double t);
double frac_integral_schauder_right(double alpha, DyadicIndex idx, double t, double T);
double frac_deriv_schauder_left(double alpha, DyadicIndex idx, double t);
/// Right derivative D_{T-}^a e_{m,k}. Singular at t = T when e_{m,k}(T) != 0;
/// that evaluation throws std::domain_error.
double frac_deriv_schauder_right(double alpha, DyadicIndex idx, double t, double T);

/// I_{0+}^alpha of a whole expansion, levels m <= up_to:
///   f0 t^a/Gamma(1+a) + (f1-f0) t^{1+a}/Gamma(2+a)
///     + sum 2^{m(1-H)} c_{m,k} tau^{1+a}_{1,2^m+k}(t).
/// Any alpha > 0 is accepted (alpha = 1 gives the ordinary primitive).
double frac_integral_expansion(const HolderExpansion& x, double alpha, double t,
                               int up_to);

/// D_{0+}^alpha of an expansion, levels m <= up_to. Requires alpha < hurst
/// (the level sums stop being summable otherwise) and t > 0 when f0 != 0.
double frac_deriv_expansion_left(const HolderExpansion& x, double alpha, double t,
                                 int up_to);

/// D_{T-}^alpha applied to x - x(T) (the boundary term of each tent cancels
/// against the constant, so no (T-t)^{-alpha} singularity survives):
///   -(f1-f0) (T-t)^{1-a}/Gamma(2-a)
///     - sum 2^{m(1-H)} c_{m,k} tau^{1-a}_{2,2^m+k}(t,T).
double frac_deriv_expansion_right(const HolderExpansion& x, double alpha, double t,
                                  double T, int up_to);

/// c1(a) = 2^a/Gamma(2-a) ( sum_{k>=1} |C_{(1-a)/2}(k)| + 2 ). The series
/// decays like k^{-1-a}; the partial sum is completed with the analytic
/// integral tail so the truncation error stays below 1e-10 for every alpha.
double c1_constant(double alpha);
/// Same, with an explicit direct-summation cutoff (used to test stability).
double c1_constant(double alpha, std::int64_t cutoff);

/// Diagnostic sequence d_{m0}, ..., d_M at the dyadic point k0/2^{m0}:
///   d_m = 2^{m(1/2-H)} sum_k D_{0+}^H e_{m,k}(k0/2^{m0})
///       = 2^H/Gamma(2-H) sum_{k=0}^{2^{m-m0} k0 - 1}
///            C_{(1-H)/2}(2^{m-m0+1} k0 - 2k - 1).
/// Strictly negative and strictly decreasing for k0 >= 1; identically zero
/// for k0 = 0. Requires 0 <= k0 <= 2^{m0}-1 and m0 <= M.
std::vector<double> dm_sequence(double hurst, int m0, std::int64_t k0, int M);

}  // namespace tlfrac
