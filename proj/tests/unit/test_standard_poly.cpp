#include <doctest.h>

#include <opfree/errors.hpp>
#include <opfree/random.hpp>
#include <opfree/standard_poly.hpp>

#include "oracles.hpp"

using namespace opfree;

TEST_CASE("subset expansion equals the permutation sum") {
    auto rng = trial_stream(0, 0);
    for (std::size_t d = 1; d <= 6; ++d) {
        std::vector<Matrix> args;
        for (std::size_t i = 0; i < d; ++i) args.push_back(random_complex(3, rng));
        CHECK(max_abs_diff(standard_polynomial(args), oracle::permutation_sum(args)) < 1e-11);
    }
}

TEST_CASE("low-degree standard polynomials") {
    auto rng = trial_stream(1, 0);
    const Matrix a = random_complex(2, rng), b = random_complex(2, rng);
    CHECK(max_abs_diff(standard_polynomial({a, b}), a * b - b * a) < 1e-14);
    // s_3(E11, E12, E21) = 2 E11 + E22 up to sign
    const Matrix s3 =
        standard_polynomial({matrix_unit(2, 0, 0), matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)});
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 2.0;
    expected(1, 1) = 1.0;
    CHECK(std::min(max_abs_diff(s3, expected), max_abs_diff(s3, -expected)) < 1e-14);
    CHECK_THROWS_AS(standard_polynomial({}), SizeLimitError);
    CHECK_THROWS_AS(standard_polynomial({a, random_complex(3, rng)}), DimensionError);
}

TEST_CASE("vanishing at degree 2n and witnesses at 2n-1") {
    CHECK(verify_al_vanishing(1, 10, 0).passed());
    CHECK(verify_al_vanishing(2, 20, 0).passed());
    for (int n = 1; n <= 3; ++n) {
        const auto w = find_nonvanishing_witness(n);
        REQUIRE(w.has_value());
        CHECK(w->degree() == static_cast<std::size_t>(2 * n - 1));
        CHECK(max_abs(standard_polynomial(w->args)) > 0.5);
    }
}
