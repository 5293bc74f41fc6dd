#include "tlfrac/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace tlfrac {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set, used by numpy and
// Boost alike).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kSqrtTwoPi = 2.5066282746310002;

double lanczos_sum(double x) {
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (x + i);
  return s;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  // Shift small arguments up through Gamma(x) = Gamma(x+1)/x.
  double shift = 1.0;
  while (x < 0.5) {
    shift *= x;
    x += 1.0;
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double r = kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
  return r / shift;
}

double log_gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma_fn: argument must be positive");
  if (x < 0.5) return std::log(gamma_fn(x));
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return std::log(kSqrtTwoPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

}  // namespace tlfrac
