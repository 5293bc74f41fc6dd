#include "tlfrac/dyadic.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tlfrac {

namespace {

void require_valid(DyadicIndex idx) {
  if (!idx.valid()) {
    throw std::domain_error("invalid dyadic index: m=" + std::to_string(idx.m) +
                            " k=" + std::to_string(idx.k));
  }
}

double pow2(int e) { return std::ldexp(1.0, e); }

}  // namespace

DyadicIndex DyadicIndex::from_flat(std::int64_t n) {
  if (n < 1) throw std::domain_error("flat index must be >= 1");
  const int m = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
  return DyadicIndex{m, n - (std::int64_t{1} << m)};
}

double haar_eval(DyadicIndex idx, double t) {
  require_valid(idx);
  // Scale so the support becomes (k, k+1]; scaling by 2^m is exact.
  const double x = std::ldexp(t, idx.m);
  const double k = static_cast<double>(idx.k);
  const double amp = std::sqrt(pow2(idx.m));
  if (x > k && x <= k + 0.5) return amp;
  if (x > k + 0.5 && x <= k + 1.0) return -amp;
  return 0.0;
}

double schauder_eval(DyadicIndex idx, double t) {
  require_valid(idx);
  const double x = std::ldexp(t, idx.m) - static_cast<double>(idx.k);
  const double tent = std::fmin(x, 1.0 - x);
  if (tent <= 0.0) return 0.0;
  return std::sqrt(pow2(-idx.m)) * tent;
}

HolderExpansion::HolderExpansion(double hurst, double f0, double f1,
                                 std::vector<std::vector<double>> levels)
    : hurst_(hurst), f0_(f0), f1_(f1), levels_(std::move(levels)) {
  if (!(hurst > 0.0)) throw std::invalid_argument("hurst exponent must be positive");
  for (std::size_t m = 0; m < levels_.size(); ++m) {
    if (levels_[m].size() != (std::size_t{1} << m)) {
      throw std::invalid_argument("level " + std::to_string(m) + " must hold 2^m coefficients");
    }
  }
}

HolderExpansion HolderExpansion::zero(double hurst, double f0, double f1, int max_level) {
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(max_level) + 1);
  for (int m = 0; m <= max_level; ++m) levels[m].assign(std::size_t{1} << m, 0.0);
  return HolderExpansion(hurst, f0, f1, std::move(levels));
}

double HolderExpansion::coefficient_bound() const {
  double bound = 0.0;
  for (const auto& lvl : levels_)
    for (double c : lvl) bound = std::fmax(bound, std::fabs(c));
  return bound;
}

double HolderExpansion::value(double t, int up_to) const {
  double acc = f0_ * (1.0 - t) + f1_ * t;
  const int top = std::min(up_to, max_level());
  for (int m = 0; m <= top; ++m) {
    // At most one tent of each level is nonzero at t.
    const double x = std::ldexp(t, m);
    auto k = static_cast<std::int64_t>(x);
    if (k >= (std::int64_t{1} << m)) k = (std::int64_t{1} << m) - 1;
    const double u = x - static_cast<double>(k);
    const double tent = std::fmin(u, 1.0 - u);
    if (tent <= 0.0) continue;
    // 2^{m(1/2-H)} * 2^{-m/2} = 2^{-mH}
    acc += levels_[m][static_cast<std::size_t>(k)] * tent * std::exp2(-m * hurst_);
  }
  return acc;
}

HolderExpansion HolderExpansion::truncated(int p) const {
  const int top = std::min(p, max_level());
  std::vector<std::vector<double>> levels(levels_.begin(), levels_.begin() + top + 1);
  return HolderExpansion(hurst_, f0_, f1_, std::move(levels));
}

HolderExpansion expand(const std::function<double(double)>& f, double hurst,
                       int max_level) {
  if (!(hurst > 0.0)) throw std::invalid_argument("hurst exponent must be positive");
  if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
  // One pass of samples at level max_level+1 feeds every second difference.
  const std::int64_t n = std::int64_t{1} << (max_level + 1);
  std::vector<double> samples(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j <= n; ++j) {
    const double v = f(static_cast<double>(j) / static_cast<double>(n));
    if (!std::isfinite(v)) {
      throw std::invalid_argument("expand: non-finite sample at j=" + std::to_string(j));
    }
    samples[static_cast<std::size_t>(j)] = v;
  }
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(max_level) + 1);
  for (int m = 0; m <= max_level; ++m) {
    const std::int64_t step = std::int64_t{1} << (max_level - m);  // half-cell at level m
    auto& lvl = levels[m];
    lvl.resize(std::size_t{1} << m);
    const double scale = std::exp2(m * hurst);
    for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k) {
      const double lo = samples[static_cast<std::size_t>(2 * k * step)];
      const double mid = samples[static_cast<std::size_t>((2 * k + 1) * step)];
      const double hi = samples[static_cast<std::size_t>((2 * k + 2) * step)];
      lvl[static_cast<std::size_t>(k)] = scale * (2.0 * mid - hi - lo);
    }
  }
  return HolderExpansion(hurst, samples.front(), samples.back(), std::move(levels));
}

HolderExpansion takagi_landsberg(double hurst, int max_level) {
  if (!(hurst > 0.0)) throw std::invalid_argument("hurst exponent must be positive");
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(max_level) + 1);
  for (int m = 0; m <= max_level; ++m) levels[m].assign(std::size_t{1} << m, 1.0);
  return HolderExpansion(hurst, 0.0, 0.0, std::move(levels));
}

double takagi_landsberg_max(double hurst) {
  return 1.0 / (3.0 * (1.0 - std::exp2(-hurst)));
}

double sup_distance(const HolderExpansion& a, const HolderExpansion& b,
                    int grid_level) {
  const std::int64_t n = std::int64_t{1} << grid_level;
  double worst = 0.0;
  for (std::int64_t j = 0; j <= n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n);
    worst = std::fmax(worst, std::fabs(a.value(t) - b.value(t)));
  }
  return worst;
}

}  // namespace tlfrac
