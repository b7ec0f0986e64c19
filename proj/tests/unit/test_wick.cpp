#include <doctest.h>

#include <random>

#include <opfree/errors.hpp>
#include <opfree/wick.hpp>

#include "oracles.hpp"

using namespace opfree;

namespace {

Eigen::MatrixXd random_psd(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = normal(rng);
    return g * g.transpose();
}

std::vector<std::vector<int>> all_words(int letters, int length) {
    std::vector<std::vector<int>> out{{}};
    for (int l = 0; l < length; ++l) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int a = 0; a < letters; ++a) {
                auto v = w;
                v.push_back(a);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("single-variable Gaussian moments") {
    const auto one = CovarianceSpec::identity(1);
    const double catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    const double double_factorial[] = {1, 1, 3, 15, 105, 945, 10395, 135135};
    for (int k = 0; k <= 7; ++k) {
        const std::vector<int> w(static_cast<std::size_t>(2 * k), 0);
        CHECK(free_wick_moment(w, one) == doctest::Approx(catalan[k]));
        CHECK(classical_wick_moment(w, one) == doctest::Approx(double_factorial[k]));
        if (2 * k + 1 <= kMaxWickLength)
            CHECK(free_wick_moment(std::vector<int>(static_cast<std::size_t>(2 * k + 1), 0), one) == 0.0);
    }
}

TEST_CASE("documented mixed words") {
    const auto two = CovarianceSpec::identity(2);
    CHECK(free_wick_moment({0, 1, 0, 1}, two) == 0.0);
    CHECK(free_wick_moment({0, 1, 1, 0}, two) == 1.0);
    CHECK(classical_wick_moment({0, 1, 0, 1}, two) == 1.0);
    CHECK(free_wick_moment({}, two) == 1.0);
    CHECK(two.names() == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("closed forms agree with brute-force pairing sums") {
    std::mt19937_64 rng(17);
    const Eigen::MatrixXd cov = random_psd(3, rng);
    const CovarianceSpec spec({"a", "b", "c"}, cov);
    for (int len = 0; len <= 6; ++len)
        for (const auto& w : all_words(3, len)) {
            CHECK(free_wick_moment(w, spec) == doctest::Approx(oracle::wick_bruteforce(w, cov, true)).epsilon(1e-12));
            CHECK(classical_wick_moment(w, spec) ==
                  doctest::Approx(oracle::wick_bruteforce(w, cov, false)).epsilon(1e-12));
        }
}

TEST_CASE("covariance validation") {
    Eigen::MatrixXd asym(2, 2);
    asym << 1, 0.5, 0.4, 1;
    CHECK_THROWS_AS(CovarianceSpec({"a", "b"}, asym), InvalidArgument);
    Eigen::MatrixXd neg(2, 2);
    neg << 1, 2, 2, 1;
    CHECK_THROWS_AS(CovarianceSpec({"a", "b"}, neg), InvalidArgument);
    CHECK_THROWS_AS(CovarianceSpec({"a"}, Eigen::MatrixXd::Identity(2, 2)), InvalidArgument);
    const auto two = CovarianceSpec::identity(2);
    CHECK_THROWS_AS(free_wick_moment({0, 2}, two), InvalidArgument);
    CHECK_THROWS_AS(free_wick_moment(std::vector<int>(16, 0), two), SizeLimitError);
}

TEST_CASE("circular star moments") {
    // c = s_0 + i s_1 with var(s_0) = var(s_1) = 1/2, so phi(c* c) = 1
    const CovarianceSpec halves({"s0", "s1"}, 0.5 * Eigen::MatrixXd::Identity(2, 2));
    const StarLetter c{0, false}, cs{0, true};
    CHECK(std::abs(circular_star_moment({cs, c}, halves) - 1.0) < 1e-14);
    CHECK(std::abs(circular_star_moment({c, c}, halves)) < 1e-14);
    CHECK(std::abs(circular_star_moment({cs, c, cs, c}, halves) - 2.0) < 1e-14);
    CHECK(std::abs(circular_star_moment({c, c, cs, cs}, halves) - 1.0) < 1e-14);
    CHECK(std::abs(circular_star_moment({c, cs, c}, halves)) < 1e-14);
    CHECK_THROWS_AS(circular_star_moment({c}, CovarianceSpec::identity(3)), InvalidArgument);
}
