#include <benchmark/benchmark.h>

#include "zetagap/arith.hpp"
#include "zetagap/functionals.hpp"
#include "zetagap/optimizer.hpp"
#include "zetagap/oracle.hpp"

using namespace zetagap;

namespace {

const Poly kF1Lambda{-3.54, -42.94, 88.05, -34.33};
const Poly kF2Lambda{4.56, 63.02, 42.72, 34.45};

void BM_SieveBuild(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        SpfSieve s(limit);
        benchmark::DoNotOptimize(s.spf(limit));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_SieveBuild)->Arg(1 << 20)->Arg(1 << 24);

void BM_KernelI(benchmark::State& state) {
    double beta = 0.76;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_I(beta, 2.7327));
        beta += 1e-9;  // defeat caching of a fixed argument
    }
}
BENCHMARK(BM_KernelI);

void BM_HValue(benchmark::State& state) {
    for (auto _ : state) {
        KernelCache cache;  // cold cache: measures the full evaluation
        benchmark::DoNotOptimize(
            h_value(kF1Lambda, kF2Lambda, 2.6, 2.7327, Mode::Plain, cache).h);
    }
}
BENCHMARK(BM_HValue);

void BM_AssembleForms(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    for (auto _ : state) {
        KernelCache cache;
        benchmark::DoNotOptimize(assemble_forms(deg, deg, 2.6, 2.7327, cache).m_n(0, 0));
    }
}
BENCHMARK(BM_AssembleForms)->Arg(2)->Arg(3);

void BM_MaxRayleigh(benchmark::State& state) {
    KernelCache cache;
    const QuadForm q = assemble_forms(3, 3, 2.6, 2.7327, cache);
    for (auto _ : state) benchmark::DoNotOptimize(max_rayleigh(q).first);
}
BENCHMARK(BM_MaxRayleigh);

void BM_HDirect(benchmark::State& state) {
    const OracleParams p =
        OracleParams::make(1e6, 2.7327, 2.6, kF1Lambda, kF2Lambda, Mode::Plain);
    const SpfSieve sieve(p.K);
    OracleOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(h_direct(p, sieve, opts));
}
BENCHMARK(BM_HDirect)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
