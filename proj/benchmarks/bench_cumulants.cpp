#include <benchmark/benchmark.h>

#include <opfree/mcx.hpp>
#include <opfree/random.hpp>

namespace {

opfree::OpWord random_word(std::size_t dim, int n) {
    auto rng = opfree::trial_stream(0, 0);
    std::vector<int> elements(static_cast<std::size_t>(n));
    std::vector<opfree::Matrix> coeffs;
    for (int i = 0; i < n; ++i) elements[static_cast<std::size_t>(i)] = i % 2;
    for (int i = 1; i < n; ++i) coeffs.push_back(opfree::random_complex(dim, rng));
    return opfree::OpWord(dim, elements, coeffs);
}

opfree::Matrix product_cumulant(const opfree::OpWord& w) {
    opfree::Matrix acc = opfree::Matrix::Identity(static_cast<Eigen::Index>(w.dim()), static_cast<Eigen::Index>(w.dim()));
    for (std::size_t i = 1; i < w.length(); ++i) acc = acc * w.coeff_before(i);
    return acc;
}

}  // namespace

static void BM_CumulantsToMoments(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(1)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(opfree::cumulants_to_moments(w, product_cumulant));
}
BENCHMARK(BM_CumulantsToMoments)->ArgsProduct({{4, 6, 8}, {1, 3}});

static void BM_MomentsToCumulants(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(1));
    const auto w = random_word(dim, static_cast<int>(state.range(0)));
    const opfree::MomentSource src{dim, [](const opfree::OpWord& x) {
                                       return opfree::cumulants_to_moments(x, product_cumulant);
                                   }};
    for (auto _ : state) benchmark::DoNotOptimize(opfree::moments_to_cumulants(w, src));
}
BENCHMARK(BM_MomentsToCumulants)->ArgsProduct({{4, 5, 6}, {1, 3}});
