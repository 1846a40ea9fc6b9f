#include <benchmark/benchmark.h>

#include <random>

#include "chroma/complex.hpp"
#include "chroma/cuts.hpp"
#include "chroma/ideal.hpp"
#include "chroma/verify.hpp"

using namespace chroma;

namespace {

Graph seeded_graph(int d) {
    std::mt19937_64 rng(0xbe0c5eed + d);
    return random_graph(d, rng);
}

void BM_WPolynomial(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(w_polynomial(g));
}
BENCHMARK(BM_WPolynomial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ChromaticPolynomial(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_polynomial(g));
}
BENCHMARK(BM_ChromaticPolynomial)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_BuildComplex(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ColoringComplex c = build_complex(g);
        benchmark::DoNotOptimize(f_vector(c));
    }
}
BENCHMARK(BM_BuildComplex)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CountDegreeMonomials(benchmark::State& state) {
    Graph g = seeded_graph(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_degree_monomials(g, state.range(0)));
}
BENCHMARK(BM_CountDegreeMonomials)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MinimalGenerators(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_generators(g));
}
BENCHMARK(BM_MinimalGenerators)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AcyclicOrientations(benchmark::State& state) {
    Graph g = seeded_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_acyclic_orientations(g));
}
BENCHMARK(BM_AcyclicOrientations)->Arg(6)->Arg(7)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
