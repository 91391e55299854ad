#include <benchmark/benchmark.h>

#include "sl2c/algebra.hpp"
#include "sl2c/numerics.hpp"
#include "sl2c/potentials.hpp"
#include "sl2c/spectra.hpp"

using namespace sl2c;

static void BM_EvalFG(benchmark::State& state) {
    ClassParams p{PotentialClass::scarf2, Complex(1.0, 0.5)};
    p.gamma = 0.2;
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_fg(p, x));
        x = x < 3.0 ? x + 1e-3 : -3.0;
    }
}
BENCHMARK(BM_EvalFG);

static void BM_ScarfSeries(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(scarf_series(2.0, 2.7, 16));
}
BENCHMARK(BM_ScarfSeries);

static void BM_InvertMorse(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(invert_morse(Complex(0.4, 2.0), Complex(4.0, 1.0)));
}
BENCHMARK(BM_InvertMorse);

static void BM_GroundState(benchmark::State& state) {
    ClassParams p{PotentialClass::scarf2, Complex(0.0, 0.78)};
    GridSpec g{-20.0, 20.0, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(ground_state(Complex(1.28, 0.0), p, g));
}
BENCHMARK(BM_GroundState)->Arg(2001);

static void BM_BuildHamiltonian(benchmark::State& state) {
    const auto V = build_physical(ScarfPT{2.0, 3.0});
    GridSpec g{-20.0, 20.0, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(build_hamiltonian(V, g));
}
BENCHMARK(BM_BuildHamiltonian)->Arg(2001);

// Structured fast path (complex-symmetric tridiagonal QL + certification).
static void BM_EigenvaluesTridiagonal(benchmark::State& state) {
    const auto V = build_physical(ScarfPT{2.0, 3.0});
    GridSpec g{-20.0, 20.0, static_cast<int>(state.range(0))};
    const ComplexMatrix H = build_hamiltonian(V, g);
    for (auto _ : state)
        benchmark::DoNotOptimize(eigenvalues_dense(H));
}
BENCHMARK(BM_EigenvaluesTridiagonal)->Arg(501)->Arg(1001)->Arg(2001)
    ->Unit(benchmark::kMillisecond);

// General path (zgeev); the perturbed corner breaks the symmetric
// tridiagonal structure.
static void BM_EigenvaluesGeneral(benchmark::State& state) {
    const auto V = build_physical(ScarfPT{2.0, 3.0});
    GridSpec g{-20.0, 20.0, static_cast<int>(state.range(0))};
    ComplexMatrix H = build_hamiltonian(V, g);
    H(0, H.cols() - 1) = Complex(1e-8, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(eigenvalues_dense(H));
}
BENCHMARK(BM_EigenvaluesGeneral)->Arg(201)->Arg(401)
    ->Unit(benchmark::kMillisecond);

static void BM_ScanCritical(benchmark::State& state) {
    GridSpec g{-20.0, 20.0, 601};
    ScanOptions opts;
    opts.curve_points = 9;
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_critical(2.0, 1.9, 2.6, g, opts));
}
BENCHMARK(BM_ScanCritical)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
