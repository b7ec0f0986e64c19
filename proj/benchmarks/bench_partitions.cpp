#include <benchmark/benchmark.h>

#include <opfree/ncpart.hpp>
#include <opfree/wick.hpp>

static void BM_EnumerateNc(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(opfree::enumerate_nc(n));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(opfree::catalan(n)));
}
BENCHMARK(BM_EnumerateNc)->DenseRange(6, 12, 2);

static void BM_EnumerateNcpp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(opfree::enumerate_ncpp(n));
}
BENCHMARK(BM_EnumerateNcpp)->DenseRange(8, 14, 2);

static void BM_FreeWickMoment(benchmark::State& state) {
    const auto spec = opfree::CovarianceSpec::identity(2);
    std::vector<int> word(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < word.size(); ++i) word[i] = static_cast<int>(i % 2);
    for (auto _ : state) benchmark::DoNotOptimize(opfree::free_wick_moment(word, spec));
}
BENCHMARK(BM_FreeWickMoment)->DenseRange(8, 14, 2);
