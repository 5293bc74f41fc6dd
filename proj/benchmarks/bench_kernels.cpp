#include <benchmark/benchmark.h>

#include <cmath>

#include "tlfrac/dyadic.hpp"
#include "tlfrac/fraccalc.hpp"
#include "tlfrac/oracle.hpp"
#include "tlfrac/solvers.hpp"
#include "tlfrac/stieltjes.hpp"

namespace {

using namespace tlfrac;

void BM_Tau1(benchmark::State& state) {
  const DyadicIndex idx{6, 11};
  double t = 0.0;
  for (auto _ : state) {
    t += 1.0 / 4096.0;
    if (t > 1.0) t -= 1.0;
    benchmark::DoNotOptimize(tau1(1.8, idx, t));
  }
}
BENCHMARK(BM_Tau1);

void BM_FgnCovariance(benchmark::State& state) {
  double t = 1.0;
  for (auto _ : state) {
    t += 0.37;
    if (t > 5000.0) t = 1.0;
    benchmark::DoNotOptimize(fgn_covariance(0.3, t));
  }
}
BENCHMARK(BM_FgnCovariance);

void BM_ExpansionEval(benchmark::State& state) {
  const auto x = takagi_landsberg(0.5, static_cast<int>(state.range(0)));
  double t = 0.0;
  for (auto _ : state) {
    t += 1.0 / 100003.0;
    if (t > 1.0) t -= 1.0;
    benchmark::DoNotOptimize(x.value(t));
  }
}
BENCHMARK(BM_ExpansionEval)->Arg(8)->Arg(12)->Arg(16);

void BM_FracIntegralExpansion(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto x = takagi_landsberg(0.5, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frac_integral_expansion(x, 0.8, 0.7, p));
  }
}
BENCHMARK(BM_FracIntegralExpansion)->Arg(4)->Arg(6)->Arg(8);

void BM_RsIntegral(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto f = expand([](double t) { return std::pow(t, 0.8); }, 0.8, p);
  const auto g = expand([](double t) { return std::pow(0.5, 0.7) - std::pow(std::fabs(t - 0.5), 0.7); },
                        0.7, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs_integral(f, g, 0.9, p, p));
  }
}
BENCHMARK(BM_RsIntegral)->Arg(3)->Arg(5);

void BM_AssembleVolterra(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto bench = exact_langevin(0.5, 0.8);
  const auto prob = bench.problem(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_volterra(prob, p));
  }
}
BENCHMARK(BM_AssembleVolterra)->Arg(5)->Arg(7)->Arg(9);

void BM_SolveVolterra(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto bench = exact_langevin(0.5, 0.8);
  const auto prob = bench.problem(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_volterra(prob, p));
  }
}
BENCHMARK(BM_SolveVolterra)->Arg(5)->Arg(7)->Arg(9);

void BM_AssembleLinear(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const double h = 0.7;
  const auto g = expand([h](double t) { return std::pow(0.5, h) - std::pow(std::fabs(t - 0.5), h); },
                        h, std::max(p, 8));
  const LinearRSProblem prob(1.0, -2.0, 3.0, 0.6, g, h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_linear(prob, p));
  }
}
BENCHMARK(BM_AssembleLinear)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
