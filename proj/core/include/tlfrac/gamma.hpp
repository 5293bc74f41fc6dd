#pragma once

namespace tlfrac {

/// Gamma function for positive arguments, Lanczos approximation (g=7, 9
/// coefficients). Relative error is below 1e-13 on (0, 8]; every kernel in
/// this library evaluates it inside (0, 4).
double gamma_fn(double x);

/// log Gamma for positive arguments.
double log_gamma_fn(double x);

}  // namespace tlfrac
