#include <random>

#include <benchmark/benchmark.h>

#include "diracspec/cauchy_calderon.hpp"
#include "diracspec/circle_analysis.hpp"
#include "diracspec/disc_solver.hpp"
#include "diracspec/weyl_witness.hpp"

using namespace diracspec;

namespace {

std::vector<cplx> random_samples(std::size_t n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<cplx> s(n);
    for (auto& v : s) v = {g(rng), g(rng)};
    return s;
}

void BM_Analyze(benchmark::State& state) {
    const int bw = static_cast<int>(state.range(0));
    const auto s = random_samples(4 * static_cast<std::size_t>(bw));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(s, bw));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(4)->Range(16, 1024);

void BM_CommutatorApply(benchmark::State& state) {
    const int bw = static_cast<int>(state.range(0));
    const FourierVector beta = analyze(random_samples(64), 16);
    const FourierVector f = analyze(random_samples(4 * static_cast<std::size_t>(bw)), bw);
    for (auto _ : state) benchmark::DoNotOptimize(commutator_apply(beta, f));
}
BENCHMARK(BM_CommutatorApply)->Arg(128)->Arg(256);

void BM_BoundarySystem(benchmark::State& state) {
    const int bw = static_cast<int>(state.range(0));
    const BoundarySpec spec = BoundarySpec::unit_circle(EtaProfile::fourier(0.0, {}, {0.3}));
    const FourierVector bhat = b_coefficients(spec, 2 * bw);
    for (auto _ : state) benchmark::DoNotOptimize(boundary_system(7.3, 1, bhat, bw));
}
BENCHMARK(BM_BoundarySystem)->Arg(24)->Arg(48);

void BM_ScanSpectrum(benchmark::State& state) {
    const BoundarySpec spec = BoundarySpec::unit_circle(EtaProfile::constant(0.0));
    ScanOptions opt;
    opt.k_max = static_cast<double>(state.range(0));
    opt.record_trace = false;
    for (auto _ : state) benchmark::DoNotOptimize(scan_spectrum(spec, 1, opt));
}
BENCHMARK(BM_ScanSpectrum)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_WeylQuotient(benchmark::State& state) {
    WeylConfig c;
    c.n = static_cast<int>(state.range(0));
    c.radius = 0.05;
    c.pole = 1e-3;
    for (auto _ : state) benchmark::DoNotOptimize(weyl_quotient(c));
}
BENCHMARK(BM_WeylQuotient)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
