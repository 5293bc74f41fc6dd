#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tlfrac {

/// Label of one basis function: level m and shift k, 0 <= k < 2^m.
/// The flat index n = 2^m + k enumerates the whole family from n = 1.
struct DyadicIndex {
  int m = 0;
  std::int64_t k = 0;

  std::int64_t flat() const { return (std::int64_t{1} << m) + k; }
  static DyadicIndex from_flat(std::int64_t n);

  bool valid() const { return m >= 0 && m < 62 && k >= 0 && k < (std::int64_t{1} << m); }

  /// Left endpoint k/2^m of the support.
  double left() const { return static_cast<double>(k) / static_cast<double>(std::int64_t{1} << m); }
  /// Midpoint (k+0.5)/2^m.
  double mid() const { return (static_cast<double>(k) + 0.5) / static_cast<double>(std::int64_t{1} << m); }
  /// Right endpoint (k+1)/2^m.
  double right() const { return (static_cast<double>(k) + 1.0) / static_cast<double>(std::int64_t{1} << m); }

  bool operator==(const DyadicIndex&) const = default;
};

/// Haar step function H_{m,k}: +2^{m/2} on (k/2^m, (k+0.5)/2^m],
/// -2^{m/2} on ((k+0.5)/2^m, (k+1)/2^m], zero elsewhere. Both intervals are
/// left-open, right-closed; in particular the value at t = 0 is 0.
double haar_eval(DyadicIndex idx, double t);

/// Faber-Schauder tent e_{m,k}(t) = 2^{-m/2} e_{0,0}(2^m t - k); the primitive
/// of the Haar function, peak 2^{-m/2}/2 at the midpoint.
double schauder_eval(DyadicIndex idx, double t);

/// A function on [0,1] stored as hurst exponent, the boundary values f(0) and
/// f(1), and per-level coefficient arrays c_{m,k} up to max_level:
///
///   f(t) = f0 (1-t) + f1 t + sum_m 2^{m(1/2-H)} sum_k c_{m,k} e_{m,k}(t).
///
/// Immutable after construction; evaluation is pure and reentrant.
class HolderExpansion {
 public:
  HolderExpansion(double hurst, double f0, double f1,
                  std::vector<std::vector<double>> levels);

  /// All-zero coefficients up to max_level.
  static HolderExpansion zero(double hurst, double f0, double f1, int max_level);

  double hurst() const { return hurst_; }
  double f0() const { return f0_; }
  double f1() const { return f1_; }
  int max_level() const { return static_cast<int>(levels_.size()) - 1; }

  double coeff(int m, std::int64_t k) const { return levels_[m][static_cast<std::size_t>(k)]; }
  double coeff(DyadicIndex idx) const { return coeff(idx.m, idx.k); }
  std::span<const double> level(int m) const { return levels_[m]; }

  /// L = max |c_{m,k}| over all stored coefficients (0 if none).
  double coefficient_bound() const;

  /// Evaluate using levels m <= up_to. Summation order is fixed: ascending m,
  /// one active tent per level, so the cost is O(up_to).
  double value(double t, int up_to) const;
  double value(double t) const { return value(t, max_level()); }

  /// Copy holding only levels m <= p (the partial-sum operator S_p).
  HolderExpansion truncated(int p) const;

 private:
  double hurst_;
  double f0_;
  double f1_;
  std::vector<std::vector<double>> levels_;
};

/// Coefficients of f in the representation above: c_{m,k} =
/// 2^{mH} [2 f((k+0.5)/2^m) - f((k+1)/2^m) - f(k/2^m)], sampled on the dyadic
/// grid of level max_level+1. Interpolates f exactly at every grid point
/// j/2^{max_level+1}. Throws std::invalid_argument on a non-finite sample.
HolderExpansion expand(const std::function<double(double)>& f, double hurst,
                       int max_level);

/// The function x^H: zero boundary values and every coefficient equal to 1.
HolderExpansion takagi_landsberg(double hurst, int max_level);

/// Supremum of the maximum of x^H over [0,1]: 1 / (3 (1 - 2^{-H})).
double takagi_landsberg_max(double hurst);

/// max_j |a(j/2^G) - b(j/2^G)| over the dyadic grid of level G, with both
/// expansions evaluated to their full stored depth.
double sup_distance(const HolderExpansion& a, const HolderExpansion& b,
                    int grid_level);

}  // namespace tlfrac
