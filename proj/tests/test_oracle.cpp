#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tlfrac/dyadic.hpp"
#include "tlfrac/fraccalc.hpp"
#include "tlfrac/gamma.hpp"
#include "tlfrac/oracle.hpp"
#include "tlfrac/stieltjes.hpp"

using namespace tlfrac;

TEST_CASE("grid function index lookup") {
  const auto f = GridFunction::sample([](double t) { return t; }, 4);
  CHECK(f.index_of(0.0) == 0);
  CHECK(f.index_of(1.0) == 16);
  CHECK(f.index_of(0.3125) == 5);
  CHECK_THROWS_AS(f.index_of(0.3), std::invalid_argument);
}

TEST_CASE("product integration of constants and ramps") {
  const auto one = GridFunction::sample([](double) { return 1.0; }, 10);
  // I^0.5 1 = t^0.5 / Gamma(1.5)
  CHECK(rl_integral_pl(one, 0.5, 1.0) == doctest::Approx(1.1283791670955126).epsilon(1e-12));
  CHECK(rl_integral_pl(one, 0.5, 0.0) == 0.0);
  const auto zero = GridFunction::sample([](double) { return 0.0; }, 10);
  CHECK(rl_integral_pl(zero, 0.7, 0.5) == 0.0);
  const auto ramp = GridFunction::sample([](double t) { return t; }, 10);
  CHECK(rl_integral_pl(ramp, 0.5, 1.0) == doctest::Approx(0.75225277806367505).epsilon(1e-12));
}

TEST_CASE("product integration is exact for basis shapes") {
  // Piecewise-constant rule on the Haar step.
  const DyadicIndex idx{1, 0};
  const double pc = rl_integral_pc([idx](double u) { return haar_eval(idx, u); }, 10, 0.3, 0.8125);
  CHECK(std::fabs(pc - frac_integral_haar_left(0.3, idx, 0.8125)) <= 1e-12);
  // Piecewise-linear rule on the tent.
  const auto tent = GridFunction::sample([idx](double u) { return schauder_eval(idx, u); }, 10);
  CHECK(std::fabs(rl_integral_pl(tent, 0.3, 0.8125) - frac_integral_schauder_left(0.3, idx, 0.8125)) <= 1e-12);
}

TEST_CASE("grunwald letnikov sanity") {
  const auto ramp = GridFunction::sample([](double t) { return t; }, 14);
  CHECK(gl_derivative(ramp, 0.5, 1.0) == doctest::Approx(1.1283791670955126).epsilon(1e-3));
  const auto c = GridFunction::sample([](double) { return 0.7; }, 14);
  CHECK(gl_derivative(c, 0.4, 0.5) ==
        doctest::Approx(0.7 * std::pow(0.5, -0.4) / gamma_fn(0.6)).epsilon(1e-6));
  CHECK_THROWS_AS(gl_derivative(c, 0.4, 0.0), std::domain_error);
  const auto z = GridFunction::sample([](double) { return 0.0; }, 6);
  CHECK(gl_derivative(z, 0.4, 0.0) == 0.0);
}

TEST_CASE("riemann stieltjes sums") {
  const auto f = GridFunction::sample([](double t) { return std::cos(t); }, 12);
  SUBCASE("constant integrand telescopes") {
    const auto g = GridFunction::sample([](double t) { return t * t; }, 12);
    const auto c = GridFunction::sample([](double) { return 1.0; }, 12);
    const auto r = rs_sum(c, g, 0.75);
    CHECK(r.value == doctest::Approx(0.5625).epsilon(1e-14));
    CHECK(r.coarse == doctest::Approx(0.5625).epsilon(1e-14));
  }
  SUBCASE("affine integrator reduces to a riemann sum") {
    const auto g = GridFunction::sample([](double t) { return 2.0 * t; }, 12);
    const auto r = rs_sum(f, g, 1.0);
    CHECK(r.value == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-3));
    // Richardson kills the leading error term of the left-point rule.
    CHECK(std::fabs(r.richardson - 2.0 * std::sin(1.0)) <
          0.2 * std::fabs(r.value - 2.0 * std::sin(1.0)));
  }
  CHECK_THROWS_AS(rs_sum(f, GridFunction::sample([](double t) { return t; }, 10), 0.5),
                  std::invalid_argument);
}

TEST_CASE("rs sum refinement follows the young rate") {
  // Empirical order of the left-point sums at successive grid levels should
  // reach at least H1 + H2 - 1.
  const double h1 = 0.85;
  const double h2 = 0.8;
  const auto fe = expand([h1](double t) { return std::pow(t, h1) - 0.3 * t; }, h1, 9);
  const auto ge = expand(
      [h2](double t) { return std::pow(0.5, h2) - std::pow(std::fabs(t - 0.5), h2); }, h2, 9);
  const double exact = rs_integral(fe, ge, 1.0);
  double prev_err = 0.0;
  double order = 10.0;
  for (int level : {10, 12, 14}) {
    const auto f = GridFunction::from_expansion(fe, level);
    const auto g = GridFunction::from_expansion(ge, level);
    const double err = std::fabs(rs_sum(f, g, 1.0).value - exact);
    if (prev_err > 0.0) order = std::min(order, std::log2(prev_err / err) / 2.0);
    prev_err = err;
  }
  CHECK(order >= h1 + h2 - 1.0);
}

TEST_CASE("double exponential quadrature") {
  CHECK(integrate_de([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // Endpoint singularity x^{-1/2}.
  CHECK(integrate_de([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-10));
  // Both endpoints singular: Beta(1/2, 1/2) = pi. The right endpoint is only
  // resolvable to about sqrt(eps) in absolute coordinates.
  CHECK(integrate_de([](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, 0.0, 1.0) ==
        doctest::Approx(3.141592653589793).epsilon(1e-7));
}

TEST_CASE("langevin benchmark") {
  const auto b = exact_langevin(0.5, 0.8);
  CHECK(b.theta == doctest::Approx(1.3164934078279188).epsilon(1e-13));
  CHECK(b.x_exact(1.0) == 1.0);
  CHECK(b.g(0.0) == 0.0);
  CHECK(b.g(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(exact_langevin(0.8, 0.5), std::domain_error);

  SUBCASE("plug-in identity theta I^a x + g = x") {
    // I^a t^h = Gamma(h+1)/Gamma(h+a+1) t^{h+a}, so theta I^a x(t) + g(t) = t^h.
    const auto grid = GridFunction::sample([&b](double t) { return b.x_exact(t); }, 14);
    for (double t : {0.25, 0.5, 0.84375, 1.0}) {
      const double lhs = b.theta * rl_integral_pl(grid, b.alpha, t) + b.g(t);
      CHECK(std::fabs(lhs - b.x_exact(t)) <= 2e-6);
    }
    // The same identity through the analytic power rule, to full precision.
    for (double t : {0.25, 0.5, 1.0}) {
      const double ia = gamma_fn(1.5) / gamma_fn(2.3) * std::pow(t, 1.3);
      CHECK(std::fabs(b.theta * ia + b.g(t) - b.x_exact(t)) <= 1e-14);
    }
  }
}

TEST_CASE("exact linear solution") {
  const auto g = [](double t) { return 0.5 - std::fabs(t - 0.5); };
  const auto x = exact_linear(1.5, -2.0, 3.0, g);
  CHECK(x(0.0) == 1.5);
  const auto x0 = exact_linear(2.0, -1.0, 0.0, g);
  CHECK(x0(0.7) == doctest::Approx(2.0 * std::exp(-0.7)).epsilon(1e-14));
  CHECK(x(0.5) == doctest::Approx(1.5 * std::exp(-1.0 + 1.5)).epsilon(1e-14));
}

TEST_CASE("picard iteration counts") {
  CHECK(picard_iterations(1e-300, 0.8, 1e-14) == 1);
  const int n = picard_iterations(1.3164934078279188, 0.8, 1e-14);
  CHECK(n > 5);
  CHECK(n < 200);
}

TEST_CASE("picard solves the theta zero limit in one step") {
  const auto ge = expand([](double t) { return std::sqrt(t) * (1.0 - std::pow(t, 0.8)); }, 0.5, 8);
  const VolterraProblem prob(0.25, 1e-30, 0.8, ge, 0.5);
  const auto x = volterra_picard(prob, 3, 1, 8);
  for (std::int64_t j = 0; j <= x.points(); ++j) {
    const double t = x.t_of(j);
    CHECK(std::fabs(x.values[static_cast<std::size_t>(j)] - (0.25 + ge.value(t))) <= 1e-20);
  }
}
