#include <doctest.h>

#include <map>
#include <random>

#include <opfree/errors.hpp>
#include <opfree/mcx.hpp>
#include <opfree/random.hpp>

#include "oracles.hpp"

using namespace opfree;

namespace {

Matrix s(double v) { return scalar_matrix(Complex(v, 0.0)); }

/// Scalar moment table indexed by element tuples; coefficients act by scalar multiplication.
MomentSource table_source(const std::map<std::vector<int>, double>& table) {
    return {1, [table](const OpWord& w) {
                Complex factor = 1.0;
                for (std::size_t i = 1; i < w.length(); ++i) factor *= w.coeff_before(i)(0, 0);
                return scalar_matrix(factor * table.at(w.elements()));
            }};
}

/// Moments of a single variable, m_n for the word of length n.
MomentSource single_variable_source(const std::vector<double>& moments) {
    return {1, [moments](const OpWord& w) {
                Complex factor = 1.0;
                for (std::size_t i = 1; i < w.length(); ++i) factor *= w.coeff_before(i)(0, 0);
                return scalar_matrix(factor * moments.at(w.length() - 1));
            }};
}

std::vector<Matrix> random_coeffs(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_complex(dim, rng));
    return out;
}

}  // namespace

TEST_CASE("low-order moment expansions") {
    oracle::RandomCumulants cum(1, 7);
    const auto k = cum.as_function();
    const auto w1 = OpWord::plain(1, {0});
    CHECK(max_abs_diff(cumulants_to_moments(w1, k), k(w1)) == 0.0);

    const auto w2 = OpWord::plain(1, {0, 1});
    const Matrix expected = k(w2) + k(OpWord::plain(1, {0})) * k(OpWord::plain(1, {1}));
    CHECK(max_abs_diff(cumulants_to_moments(w2, k), expected) < 1e-14);

    // only order 2 nonzero and equal to 1: each non-crossing pairing contributes 1
    const CumulantFn pair_only = [](const OpWord& w) {
        return w.length() == 2 ? Matrix(w.coeff_before(1)) : s(0.0);
    };
    CHECK(cumulants_to_moments(OpWord::plain(1, {0, 0, 0, 0}), pair_only)(0, 0).real() == doctest::Approx(2.0));
    CHECK(cumulants_to_moments(OpWord::plain(1, std::vector<int>(6, 0)), pair_only)(0, 0).real() ==
          doctest::Approx(5.0));
}

TEST_CASE("k_pi evaluation follows the nesting rules") {
    std::mt19937_64 rng(3);
    oracle::RandomCumulants cum(2, 11);
    const auto k = cum.as_function();
    const auto coeffs = random_coeffs(2, 2, rng);
    const OpWord w(2, {0, 1, 2}, coeffs);

    // {(1,3),(2)}: inner value absorbed between b_1 and b_2
    const Matrix inner = k(OpWord(2, {1}, {}));
    const Matrix expected = k(OpWord(2, {0, 2}, {coeffs[0] * inner * coeffs[1]}));
    CHECK(max_abs_diff(k_pi_evaluate(NcPartition(SetPartition(3, {{0, 2}, {1}})), w, k), expected) < 1e-13);

    // singletons multiply left to right with the coefficients between them
    const Matrix singles =
        k(OpWord(2, {0}, {})) * coeffs[0] * k(OpWord(2, {1}, {})) * coeffs[1] * k(OpWord(2, {2}, {}));
    CHECK(max_abs_diff(k_pi_evaluate(NcPartition(SetPartition(3, {{0}, {1}, {2}})), w, k), singles) < 1e-13);

    // the one-block partition returns the cumulant itself
    CHECK(max_abs_diff(k_pi_evaluate(single_block(3), w, k), k(w)) < 1e-13);

    // inner block as a suffix: multiplies on the right
    const Matrix suffix = k(OpWord(2, {0}, {})) * coeffs[0] * k(OpWord(2, {1, 2}, {coeffs[1]}));
    CHECK(max_abs_diff(k_pi_evaluate(NcPartition(SetPartition(3, {{0}, {1, 2}})), w, k), suffix) < 1e-13);

    CHECK_THROWS_AS(k_pi_evaluate(SetPartition(4, {{0, 2}, {1, 3}}), OpWord::plain(2, {0, 1, 2, 3}), k),
                    InvalidArgument);
    CHECK_THROWS_AS(k_pi_evaluate(single_block(2), w, k), InvalidArgument);
}

TEST_CASE("OpWord validates coefficient shapes") {
    CHECK_THROWS_AS(OpWord(2, {0, 1}, {}), InvalidArgument);
    CHECK_THROWS_AS(OpWord(2, {0, 1}, {Matrix::Identity(3, 3)}), DimensionError);
    CHECK_THROWS_AS(OpWord(1, {}, {}), InvalidArgument);
    std::mt19937_64 rng(1);
    const auto coeffs = random_coeffs(2, 2, rng);
    const auto left = OpWord(2, {0, 1, 2}, coeffs);
    const auto right = OpWord::right_placed(2, {0, 1, 2}, coeffs);
    CHECK(left.coeffs().size() == right.coeffs().size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) CHECK(max_abs_diff(left.coeffs()[i], right.coeffs()[i]) == 0.0);
}

TEST_CASE("moments to cumulants on documented scalar inputs") {
    // phi(a) = 1, phi(a^2) = 3
    CHECK(moments_to_cumulants(OpWord::plain(1, {0, 0}), single_variable_source({1.0, 3.0}))(0, 0).real() ==
          doctest::Approx(2.0));
    // centred, unit variance, vanishing third moment
    CHECK(std::abs(moments_to_cumulants(OpWord::plain(1, {0, 0, 0}), single_variable_source({0.0, 1.0, 0.0}))(0, 0)) <
          1e-14);
    // square of a standard semicircular: moments are Catalan numbers, all free cumulants 1
    const auto src = single_variable_source({1.0, 2.0, 5.0, 14.0, 42.0});
    for (int n = 1; n <= 5; ++n)
        CHECK(moments_to_cumulants(OpWord::plain(1, std::vector<int>(static_cast<std::size_t>(n), 0)), src)(0, 0)
                  .real() == doctest::Approx(1.0));
}

TEST_CASE("single-variable inversion agrees with brute-force subtraction") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> moments(6);
        for (auto& m : moments) m = normal(rng);
        const auto expected = oracle::scalar_free_cumulants(moments);
        const auto src = single_variable_source(moments);
        for (std::size_t n = 1; n <= moments.size(); ++n) {
            const auto got = moments_to_cumulants(OpWord::plain(1, std::vector<int>(n, 0)), src)(0, 0);
            CHECK(std::abs(got - expected[n - 1]) < 1e-10);
        }
    }
}

TEST_CASE("order-2 and order-3 closed forms") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
        std::map<std::vector<int>, double> t;
        for (int i = 0; i < 3; ++i) {
            t[{i}] = normal(rng);
            for (int j = 0; j < 3; ++j) {
                t[{i, j}] = normal(rng);
                for (int l = 0; l < 3; ++l) t[{i, j, l}] = normal(rng);
            }
        }
        const auto src = table_source(t);
        const double k2 = t[{0, 1}] - t[{0}] * t[{1}];
        CHECK(std::abs(moments_to_cumulants(OpWord::plain(1, {0, 1}), src)(0, 0) - k2) < 1e-12);
        const double k3 = t[{0, 1, 2}] - t[{0}] * t[{1, 2}] - t[{0, 1}] * t[{2}] - t[{0, 2}] * t[{1}] +
                          2.0 * t[{0}] * t[{1}] * t[{2}];
        CHECK(std::abs(moments_to_cumulants(OpWord::plain(1, {0, 1, 2}), src)(0, 0) - k3) < 1e-12);
    }
}

TEST_CASE("inverse pair on random scalar and matrix-valued systems") {
    for (std::size_t dim : {std::size_t{1}, std::size_t{2}}) {
        const int max_order = dim == 1 ? 5 : 4;
        for (std::uint64_t sys = 0; sys < 10; ++sys) {
            oracle::RandomCumulants cum(dim, 100 + sys);
            const auto k = cum.as_function();
            const MomentSource src{dim, [&](const OpWord& w) { return cumulants_to_moments(w, k); }};
            auto rng = trial_stream(sys, dim);
            std::uniform_int_distribution<int> letter(0, 2);
            for (int n = 1; n <= max_order; ++n) {
                std::vector<int> elements;
                for (int i = 0; i < n; ++i) elements.push_back(letter(rng));
                const OpWord w(dim, elements, random_coeffs(static_cast<std::size_t>(n - 1), dim, rng));
                CHECK(max_abs_diff(moments_to_cumulants(w, src), k(w)) < 1e-12);
            }
        }
    }
}

TEST_CASE("multiplicativity across a gap") {
    oracle::RandomCumulants cum(2, 21);
    const auto k = cum.as_function();
    std::mt19937_64 rng(4);
    const auto coeffs = random_coeffs(4, 2, rng);
    const OpWord w(2, {0, 1, 2, 0, 1}, coeffs);
    const NcPartition pi(SetPartition(5, {{0, 2}, {1}, {3, 4}}));
    const NcPartition left(SetPartition(3, {{0, 2}, {1}}));
    const NcPartition right(SetPartition(2, {{0, 1}}));
    const OpWord w_left(2, {0, 1, 2}, {coeffs[0], coeffs[1]});
    const OpWord w_right(2, {0, 1}, {coeffs[3]});
    const Matrix expected = k_pi_evaluate(left, w_left, k) * coeffs[2] * k_pi_evaluate(right, w_right, k);
    CHECK(max_abs_diff(k_pi_evaluate(pi, w, k), expected) < 1e-12);
}

TEST_CASE("scalar coefficients factor out") {
    oracle::RandomCumulants cum(1, 31);
    const auto k = cum.as_function();
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> elements(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) elements[static_cast<std::size_t>(i)] = i % 3;
        const auto coeffs = random_coeffs(static_cast<std::size_t>(n - 1), 1, rng);
        Complex product = 1.0;
        for (const auto& c : coeffs) product *= c(0, 0);
        const OpWord w(1, elements, coeffs);
        for (const auto& pi : nc_partitions(n)) {
            const Complex lhs = k_pi_evaluate(pi, w, k)(0, 0);
            const Complex rhs = product * k_pi_evaluate(pi, OpWord::plain(1, elements), k)(0, 0);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("xi and eta functionals") {
    // plain single-variable moments of a standard semicircular
    const auto src = single_variable_source({0.0, 1.0, 0.0, 2.0, 0.0, 5.0});
    CHECK(std::abs(xi_functional({0, 0}, {s(1.0)}, src)(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(xi_functional({0, 0, 0}, {s(1.0), s(1.0)}, src)(0, 0)) < 1e-14);
    CHECK(std::abs(xi_functional({0, 0, 0, 0}, {s(2.0), s(-1.0), s(0.5)}, src)(0, 0)) < 1e-14);
    CHECK(std::abs(eta_functional({0, 0}, {s(1.0)}, src)(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(eta_functional({0, 0, 0, 0}, {s(1.0), s(1.0), s(1.0)}, src)(0, 0) - 2.0) < 1e-14);
    CHECK(std::abs(eta_functional({0, 0, 0}, {s(1.0), s(1.0)}, src)(0, 0)) < 1e-14);
    CHECK(std::abs(xi_functional({0}, {}, single_variable_source({0.7}))(0, 0) - 0.7) < 1e-14);
    CHECK_THROWS_AS(xi_functional({0, 0}, {}, src), InvalidArgument);
}
