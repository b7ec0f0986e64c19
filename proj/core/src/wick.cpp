#include "opfree/wick.hpp"

#include <cmath>
#include <string>

#include "opfree/errors.hpp"
#include "opfree/ncpart.hpp"

namespace opfree {
namespace {

void check_word(const std::vector<int>& word, const CovarianceSpec& spec) {
    if (word.size() > static_cast<std::size_t>(kMaxWickLength))
        throw SizeLimitError("Wick word length " + std::to_string(word.size()) + " exceeds " +
                             std::to_string(kMaxWickLength));
    for (int v : word)
        if (v < 0 || v >= spec.size())
            throw InvalidArgument("Wick word index " + std::to_string(v) + " out of range");
}

template <typename Partitions>
double pairing_sum(const std::vector<int>& word, const CovarianceSpec& spec, const Partitions& parts) {
    double total = 0.0;
    for (const auto& p : parts) {
        double term = 1.0;
        for (const auto& b : p.blocks()) {
            term *= spec(word[static_cast<std::size_t>(b[0])], word[static_cast<std::size_t>(b[1])]);
            if (term == 0.0) break;
        }
        total += term;
    }
    return total;
}

}  // namespace

CovarianceSpec::CovarianceSpec(std::vector<std::string> names, Eigen::MatrixXd cov)
    : names_(std::move(names)), cov_(std::move(cov)) {
    if (cov_.rows() != cov_.cols()) throw InvalidArgument("covariance matrix is not square");
    if (static_cast<std::size_t>(cov_.rows()) != names_.size())
        throw InvalidArgument("covariance size differs from the number of names");
    if (cov_.size() > 0 && (cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw InvalidArgument("covariance matrix is not symmetric");
    if (cov_.size() > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov_, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().minCoeff() < -1e-10)
            throw InvalidArgument("covariance matrix is not positive semidefinite");
    }
}

CovarianceSpec CovarianceSpec::identity(int m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
    return CovarianceSpec(std::move(names), Eigen::MatrixXd::Identity(m, m));
}

double free_wick_moment(const std::vector<int>& word, const CovarianceSpec& spec) {
    check_word(word, spec);
    if (word.empty()) return 1.0;
    if (word.size() % 2 != 0) return 0.0;
    return pairing_sum(word, spec, enumerate_ncpp(static_cast<int>(word.size())));
}

double classical_wick_moment(const std::vector<int>& word, const CovarianceSpec& spec) {
    check_word(word, spec);
    if (word.empty()) return 1.0;
    if (word.size() % 2 != 0) return 0.0;
    return pairing_sum(word, spec, enumerate_pairings(static_cast<int>(word.size())));
}

std::complex<double> circular_star_moment(const StarWord& word, const CovarianceSpec& real_parts) {
    if (real_parts.size() % 2 != 0)
        throw InvalidArgument("circular_star_moment: real-part covariance must have even size");
    const int count = real_parts.size() / 2;
    for (const auto& l : word)
        if (l.index < 0 || l.index >= count)
            throw InvalidArgument("circular_star_moment: letter index " + std::to_string(l.index) + " out of range");
    if (word.size() > static_cast<std::size_t>(kMaxWickLength))
        throw SizeLimitError("circular_star_moment: word too long");

    // Bit t of `choice` picks the imaginary part of letter t.
    std::complex<double> total = 0.0;
    std::vector<int> real_word(word.size());
    const std::size_t expansions = std::size_t{1} << word.size();
    for (std::size_t choice = 0; choice < expansions; ++choice) {
        std::complex<double> weight = 1.0;
        for (std::size_t t = 0; t < word.size(); ++t) {
            const bool imag = (choice >> t) & 1U;
            real_word[t] = 2 * word[t].index + (imag ? 1 : 0);
            if (imag) weight *= word[t].star ? std::complex<double>(0.0, -1.0) : std::complex<double>(0.0, 1.0);
        }
        const double m = free_wick_moment(real_word, real_parts);
        if (m != 0.0) total += weight * m;
    }
    return total;
}

}  // namespace opfree
