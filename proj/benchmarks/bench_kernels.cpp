#include <benchmark/benchmark.h>

#include "sphfun/cfun.hpp"
#include "sphfun/complexmath.hpp"
#include "sphfun/higherrank.hpp"
#include "sphfun/models.hpp"
#include "sphfun/rankone.hpp"

namespace {

using sphfun::Complex;

void BM_Gamma(benchmark::State& st) {
  Complex z(0.3, 4.5);
  for (auto _ : st) {
    benchmark::DoNotOptimize(sphfun::gamma(z));
    z += Complex(1e-9, 0);
  }
}
BENCHMARK(BM_Gamma);

void BM_LogGammaLarge(benchmark::State& st) {
  const Complex z(150.0, 40.0);
  for (auto _ : st) benchmark::DoNotOptimize(sphfun::log_gamma(z));
}
BENCHMARK(BM_LogGammaLarge);

void BM_Gauss2F1(benchmark::State& st) {
  const double z = static_cast<double>(st.range(0)) / 100.0;
  const Complex a(0.3, 0.2), b(-0.7, 0.1), c(1.4, 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(sphfun::gauss_2f1(a, b, c, z));
}
BENCHMARK(BM_Gauss2F1)->Arg(30)->Arg(60)->Arg(95)->Arg(99);

void BM_PhiTau(benchmark::State& st) {
  const sphfun::RankOneSpace sp = sphfun::hyperbolic_space(2);
  const auto kt = sphfun::ktype_from_rs(sp, 0, 2);
  const double t = static_cast<double>(st.range(0)) / 10.0;
  for (auto _ : st) benchmark::DoNotOptimize(sphfun::phi_tau(sp, kt, Complex(0.7, 0.2), t));
}
BENCHMARK(BM_PhiTau)->Arg(5)->Arg(30)->Arg(180);

void BM_SeriesEval(benchmark::State& st) {
  const sphfun::RankOneSpace sp = sphfun::hyperbolic_space(3);
  for (auto _ : st) {
    benchmark::DoNotOptimize(sphfun::hc_series_eval(sp, Complex(0.7, 0.2), 2.0, static_cast<int>(st.range(0))));
  }
}
BENCHMARK(BM_SeriesEval)->Arg(20)->Arg(40)->Arg(80);

void BM_CFullB2(benchmark::State& st) {
  const sphfun::RootDatum d = sphfun::datum::b2(1, 2, 1);
  const sphfun::SpectralParam lam{{Complex(0.7, -0.1), Complex(1.9, 0.3)}};
  for (auto _ : st) benchmark::DoNotOptimize(sphfun::c_full(d, lam));
}
BENCHMARK(BM_CFullB2);

void BM_QuadPhiK(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sphfun::quad_phi_K(2, Complex(0.7, 0.2), 1.5));
}
BENCHMARK(BM_QuadPhiK);

void BM_QuadCNbar(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sphfun::quad_c_Nbar(3, Complex(1.0, -0.5)));
}
BENCHMARK(BM_QuadCNbar);

}  // namespace
BENCHMARK_MAIN();
