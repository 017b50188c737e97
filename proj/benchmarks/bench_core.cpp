#include <benchmark/benchmark.h>

#include <pdcrystal/crystal.hpp>
#include <pdcrystal/keylab.hpp>
#include <pdcrystal/permutation.hpp>
#include <pdcrystal/pipe_dream.hpp>
#include <pdcrystal/polynomial.hpp>
#include <pdcrystal/rfc.hpp>

using namespace pdcrystal;

namespace {

const Permutation& bench_perm() {
    static const Permutation w({4, 7, 2, 6, 3, 1, 5});
    return w;
}

void BM_EnumeratePipeDreams(benchmark::State& state) {
    for (auto _ : state) {
        auto dreams = reduced_pipe_dreams(bench_perm());
        benchmark::DoNotOptimize(dreams);
    }
}
BENCHMARK(BM_EnumeratePipeDreams);

void BM_SchubertPipeDreams(benchmark::State& state) {
    for (auto _ : state) {
        auto p = schubert_via_pipe_dreams(bench_perm());
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SchubertPipeDreams);

void BM_SchubertCompatible(benchmark::State& state) {
    for (auto _ : state) {
        auto p = schubert_via_compatible_sequences(bench_perm());
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SchubertCompatible);

void BM_SchubertRFC(benchmark::State& state) {
    for (auto _ : state) {
        auto p = schubert_via_rfc(bench_perm());
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SchubertRFC);

void BM_SchubertDividedDifferences(benchmark::State& state) {
    for (auto _ : state) {
        auto p = schubert_via_divided_differences(bench_perm());
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SchubertDividedDifferences);

void BM_CrystalGraph(benchmark::State& state) {
    for (auto _ : state) {
        auto g = crystal_graph(bench_perm());
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_CrystalGraph);

void BM_KeyDecomposition(benchmark::State& state) {
    for (auto _ : state) {
        auto comps = key_decomposition(bench_perm());
        benchmark::DoNotOptimize(comps);
    }
}
BENCHMARK(BM_KeyDecomposition);

void BM_KeyPolynomial(benchmark::State& state) {
    const Composition a = {3, 5, 1, 3, 1, 0, 0};
    for (auto _ : state) {
        auto p = key_polynomial(a);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_KeyPolynomial);

}  // namespace

BENCHMARK_MAIN();
