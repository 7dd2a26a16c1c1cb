#include <benchmark/benchmark.h>

#include "pft/families.hpp"
#include "pft/language.hpp"
#include "pft/periods.hpp"
#include "pft/presentation.hpp"
#include "pft/spectral.hpp"

#include <random>

namespace {

void BM_BuildMs(benchmark::State& state) {
    const pft::PftSpec spec = pft::xk_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pft::build_ms(spec));
    }
}
BENCHMARK(BM_BuildMs)->DenseRange(2, 8, 2);

void BM_BlockDfa(benchmark::State& state) {
    const auto g = pft::build_ms(pft::xk_spec(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pft::block_dfa(g));
    }
    state.counters["states"] = static_cast<double>(g.num_states());
}
BENCHMARK(BM_BlockDfa)->DenseRange(2, 6, 1);

pft::IntMatrix random_matrix(std::size_t n) {
    std::mt19937_64 rng(n);
    pft::IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = static_cast<int>(rng() % 3 == 0);
        }
    }
    return m;
}

void BM_CharPolyFaddeev(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pft::char_poly_faddeev(m));
    }
}
BENCHMARK(BM_CharPolyFaddeev)->RangeMultiplier(2)->Range(8, 64);

void BM_CharPolyMultimodular(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pft::char_poly_multimodular(m));
    }
}
BENCHMARK(BM_CharPolyMultimodular)->RangeMultiplier(2)->Range(8, 128);

void BM_Entropy(benchmark::State& state) {
    const auto g = pft::build_ms(pft::xk_spec(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pft::entropy(g));
    }
}
BENCHMARK(BM_Entropy)->DenseRange(2, 6, 2);

void BM_TSeq(benchmark::State& state) {
    const pft::PftSpec spec = pft::xk_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pft::t_seq(spec, 16));
    }
}
BENCHMARK(BM_TSeq)->DenseRange(2, 8, 2);

void BM_TSeqViaCycles(benchmark::State& state) {
    const pft::PftSpec spec = pft::xk_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pft::t_seq_via_cycles(spec, 16));
    }
}
BENCHMARK(BM_TSeqViaCycles)->DenseRange(2, 8, 2);

} // namespace

BENCHMARK_MAIN();
