#include <benchmark/benchmark.h>

#include "xic/gamma.hpp"
#include "xic/precision.hpp"
#include "xic/series.hpp"
#include "xic/transforms.hpp"
#include "xic/xi.hpp"
#include "xic/zeta.hpp"

using xic::Complex;

namespace {

const xic::PrecisionContext ctx{};

void BM_LogGammaComplex(benchmark::State& state) {
    const Complex z{0.5, 12.0};
    for (auto _ : state) benchmark::DoNotOptimize(xic::log_gamma(z));
}
BENCHMARK(BM_LogGammaComplex);

void BM_RiemannZetaCriticalLine(benchmark::State& state) {
    const Complex s{0.5, static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(xic::riemann_zeta(s));
}
BENCHMARK(BM_RiemannZetaCriticalLine)->Arg(5)->Arg(30)->Arg(60);

void BM_HurwitzZeta(benchmark::State& state) {
    const Complex z{2.5, 0.0};
    const double a = 0.1 + 0.5 * static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(xic::hurwitz_zeta(z, a));
}
BENCHMARK(BM_HurwitzZeta)->Arg(1)->Arg(40);

void BM_XiCapital(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(xic::xi_capital(t));
}
BENCHMARK(BM_XiCapital)->Arg(10)->Arg(40);

void BM_KernelPoint(benchmark::State& state) {
    const Complex z{4.0, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(xic::transforms::xi_gamma_kernel(z, 7.3));
}
BENCHMARK(BM_KernelPoint);

void BM_XiKernelIntegral(benchmark::State& state) {
    const Complex z{4.0, 0.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(xic::transforms::xi_kernel_integral(z, 2.0, ctx));
}
BENCHMARK(BM_XiKernelIntegral)->Unit(benchmark::kMillisecond);

void BM_MellinLineIntegral(benchmark::State& state) {
    const Complex z{4.0, 0.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(xic::transforms::mellin_line_integral(z, 2.0, {}, ctx));
}
BENCHMARK(BM_MellinLineIntegral)->Unit(benchmark::kMillisecond);

void BM_SumHurwitzShifted(benchmark::State& state) {
    const Complex z{4.0, 0.0};
    const double alpha = state.range(0) == 0 ? 0.5 : 2.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(xic::series::sum_hurwitz_shifted(z, alpha, ctx));
}
BENCHMARK(BM_SumHurwitzShifted)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SumPhi(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(xic::series::sum_phi(2.0, ctx));
}
BENCHMARK(BM_SumPhi)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
