#include <benchmark/benchmark.h>

#include <opfree/amplify.hpp>
#include <opfree/fock.hpp>
#include <opfree/random.hpp>

static void BM_FreeVacuumExpectation(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const auto family = opfree::semicircular_family(Eigen::MatrixXd::Identity(3, 3), len);
    std::vector<opfree::FockOperator> ops;
    for (int i = 0; i < len; ++i) ops.push_back(family[static_cast<std::size_t>(i % 3)]);
    for (auto _ : state) benchmark::DoNotOptimize(opfree::vacuum_expectation(ops));
}
BENCHMARK(BM_FreeVacuumExpectation)->DenseRange(4, 10, 2);

static void BM_OpvaluedCumulant(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const auto k = static_cast<std::size_t>(state.range(1));
    const auto family = opfree::semicircular_family(Eigen::MatrixXd::Identity(2, 2), p + 1);
    auto rng = opfree::trial_stream(0, 0);
    const auto x = opfree::amplify({opfree::random_selfadjoint(k, rng), opfree::random_selfadjoint(k, rng)}, family);
    std::vector<opfree::Matrix> b;
    for (int i = 0; i < p; ++i) b.push_back(opfree::random_complex(k, rng));
    for (auto _ : state) benchmark::DoNotOptimize(opfree::opvalued_cumulant(x, b));
}
BENCHMARK(BM_OpvaluedCumulant)->ArgsProduct({{2, 3, 4}, {2, 3}});
