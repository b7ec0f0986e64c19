#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <opfree/errors.hpp>
#include <opfree/random.hpp>
#include <opfree/symfock.hpp>

using namespace opfree;

TEST_CASE("cyclic coefficients") {
    auto rng = trial_stream(0, 0);
    const Matrix a = random_complex(2, rng);
    const auto cc = build_cyclic_coefficients(3, 2, a);
    REQUIRE(cc.cycle.size() == 3);
    CHECK(cc.cycle[0].rows() == 6);
    CHECK(max_abs_diff(cc.cycle[0], embed_block(Matrix::Identity(2, 2), 3, 0, 1)) == 0.0);
    CHECK(max_abs_diff(cc.cycle[2], embed_block(Matrix::Identity(2, 2), 3, 2, 0)) == 0.0);
    CHECK(max_abs_diff(cc.b[0], embed_block(a, 3, 0, 1)) == 0.0);
    // identity ordering: A in the top-left corner
    CHECK(max_abs_diff(permutation_product({0, 1, 2}, cc), embed_block(a, 3, 0, 0)) < 1e-14);
    CHECK_THROWS_AS(build_cyclic_coefficients(1, 2, a), InvalidArgument);
    CHECK_THROWS_AS(build_cyclic_coefficients(3, 3, a), DimensionError);
}

TEST_CASE("only the identity survives corner compression") {
    auto rng = trial_stream(3, 0);
    for (int n = 2; n <= 4; ++n) {
        const Matrix a = random_complex(2, rng);
        const auto cc = build_cyclic_coefficients(n, 2, a);
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        const Matrix corner = embed_block(Matrix::Identity(2, 2), n, 0, 0);
        do {
            const Matrix compressed = corner * permutation_product(sigma, cc);
            const bool id = std::is_sorted(sigma.begin(), sigma.end());
            CHECK(max_abs(compressed - (id ? embed_block(a, n, 0, 0) : Matrix::Zero(2 * n, 2 * n))) == 0.0);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}

TEST_CASE("the swap leaves a nonzero uncompressed product") {
    const Matrix a = Matrix::Identity(1, 1);
    const auto cc = build_cyclic_coefficients(2, 1, a);
    CHECK(max_abs(permutation_product({1, 0}, cc)) > 0.0);
}

TEST_CASE("symmetrization report") {
    auto rng = trial_stream(5, 0);
    const auto report = verify_symmetrization(3, 2, random_complex(2, rng));
    CHECK(report.passed());
    // the two non-identity cyclic shifts of S_3 are flagged
    const auto flagged = std::count_if(report.observations.begin(), report.observations.end(),
                                       [](const std::string& o) { return o.find("cyclic shift") != std::string::npos; });
    CHECK(flagged >= 2);
}
