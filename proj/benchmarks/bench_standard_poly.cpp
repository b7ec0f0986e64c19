#include <benchmark/benchmark.h>

#include <opfree/random.hpp>
#include <opfree/standard_poly.hpp>

static void BM_StandardPolynomial(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    auto rng = opfree::trial_stream(0, 0);
    std::vector<opfree::Matrix> args;
    for (std::size_t i = 0; i < d; ++i) args.push_back(opfree::random_complex(3, rng));
    for (auto _ : state) benchmark::DoNotOptimize(opfree::standard_polynomial(args));
}
BENCHMARK(BM_StandardPolynomial)->DenseRange(2, 8, 2);

static void BM_WitnessSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(opfree::find_nonvanishing_witness(n));
}
BENCHMARK(BM_WitnessSearch)->DenseRange(2, 4, 1);
