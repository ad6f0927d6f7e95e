#include <benchmark/benchmark.h>

#include "spectra/canonical.hpp"
#include "spectra/families.hpp"
#include "spectra/generate.hpp"
#include "spectra/mis.hpp"

namespace {

void BM_CycleSpectrum(benchmark::State& state) {
    spectra::Graph g = spectra::cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectra::spectrum(g));
    }
}
BENCHMARK(BM_CycleSpectrum)->Arg(20)->Arg(30)->Arg(40);

void BM_DecoratedCycleSpectrum(benchmark::State& state) {
    spectra::Graph g = spectra::decorated_cycle(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectra::spectrum(g));
    }
}
BENCHMARK(BM_DecoratedCycleSpectrum)->Arg(6)->Arg(8)->Arg(10);

void BM_CanonicalForm(benchmark::State& state) {
    spectra::Graph g = spectra::decorated_cycle(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectra::canonical_graph6(g));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(10);

void BM_GenerateHighGirth(benchmark::State& state) {
    spectra::GenSpec spec;
    spec.n = static_cast<int>(state.range(0));
    spec.min_degree = 2;
    spec.min_girth = 7;
    spec.connected_only = true;
    spec.allow_acyclic = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectra::generate_all(spec));
    }
}
BENCHMARK(BM_GenerateHighGirth)->Arg(9)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
