#pragma once

#include <cmath>

#include "tlfrac/fraccalc.hpp"

namespace tlfrac::detail {

inline double pos_pow(double x, double a) { return x > 0.0 ? std::pow(x, a) : 0.0; }

// Unit-scale left kernel psi_a(x) = [x_+^a - 2 (x-0.5)_+^a + (x-1)_+^a] / Gamma(1+a),
// so tau^a_{1,2^m+k}(t) = 2^{-ma} psi_a(2^m t - k). Past the support (x >= 1)
// the covariance form keeps the second difference accurate.
inline double psi_left(double alpha, double x, double inv_gamma1a) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) {
    return std::exp2(1.0 - alpha) * inv_gamma1a * fgn_covariance(alpha / 2.0, 2.0 * x - 1.0);
  }
  return (std::pow(x, alpha) - 2.0 * pos_pow(x - 0.5, alpha)) * inv_gamma1a;
}

}  // namespace tlfrac::detail
