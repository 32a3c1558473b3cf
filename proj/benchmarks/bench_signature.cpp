#include <benchmark/benchmark.h>

#include <random>

#include "twistlab/involutions.hpp"
#include "twistlab/lefschetz.hpp"
#include "twistlab/suites.hpp"

using namespace twistlab;

static void BM_MeyerTau(benchmark::State& state) {
    const SymplecticSpace sp(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    const auto a = random_symplectic(sp, rng, 12);
    const auto b = random_symplectic(sp, rng, 12);
    for (auto _ : state) benchmark::DoNotOptimize(meyer_tau(a, b));
}
BENCHMARK(BM_MeyerTau)->Arg(2)->Arg(4)->Arg(8)->Arg(14);

static void BM_WordMatrix(benchmark::State& state) {
    const auto w = theta_word({1, static_cast<int>(state.range(0)), 1});
    const auto sq = w.word.power(2);
    for (auto _ : state) benchmark::DoNotOptimize(word_matrix(sq, w.config));
}
BENCHMARK(BM_WordMatrix)->Arg(2)->Arg(8)->Arg(20);

static void BM_LfSignature(benchmark::State& state) {
    const ThetaParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                        static_cast<int>(state.range(2))};
    const auto w = theta_word(p);
    const auto f = Factorization::from_word(w.word.power(2), w.config);
    for (auto _ : state) benchmark::DoNotOptimize(lf_signature(f).sigma);
}
BENCHMARK(BM_LfSignature)->Args({1, 2, 1})->Args({2, 4, 2})->Args({4, 2, 4})->Args({3, 8, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
