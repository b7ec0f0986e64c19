#pragma once

// Truncated Fock-space models.
//
// Free (full) Fock space over R^m: basis words of length 0..depth, vacuum is
// the empty word. Creation prepends a letter, annihilation strips one; creating
// out of the top level gives 0. Bosonic Fock space: occupation tuples with
// total occupation <= cutoff and sqrt(n) ladder factors.
//
// Every operator carries a `degree` (number of ladder factors in its longest
// term). A vacuum expectation is exact whenever the summed degree does not
// exceed the truncation, and is refused otherwise.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace opfree {

enum class FockKind { Free, Bosonic };

struct BasisInfo {
    FockKind kind = FockKind::Free;
    int modes = 0;
    int depth = 0;  ///< word length (free) or total occupation (bosonic) cutoff
    std::size_t size = 0;

    friend bool operator==(const BasisInfo&, const BasisInfo&) = default;
};

class FreeFockBasis {
public:
    FreeFockBasis(int modes, int depth);

    int modes() const noexcept { return modes_; }
    int depth() const noexcept { return depth_; }
    std::size_t size() const noexcept { return offsets_.back(); }
    BasisInfo info() const { return {FockKind::Free, modes_, depth_, size()}; }

    /// Index of a word of 0-based letters.
    std::size_t index(const std::vector<int>& word) const;
    std::vector<int> word(std::size_t index) const;
    int level(std::size_t index) const;
    /// First index of words of length `level`.
    std::size_t level_offset(int level) const { return offsets_.at(static_cast<std::size_t>(level)); }

private:
    int modes_;
    int depth_;
    std::vector<std::size_t> offsets_;  // offsets_[l] = sum_{j<l} m^j, with one sentinel
    std::vector<std::size_t> powers_;   // m^l
};

class BosonBasis {
public:
    BosonBasis(int modes, int cutoff);

    int modes() const noexcept { return modes_; }
    int cutoff() const noexcept { return cutoff_; }
    std::size_t size() const noexcept { return states_.size(); }
    BasisInfo info() const { return {FockKind::Bosonic, modes_, cutoff_, size()}; }

    /// Position of an occupation tuple in lexicographic order; throws InvalidArgument if absent.
    std::size_t index(const std::vector<int>& occupation) const;
    const std::vector<int>& occupation(std::size_t index) const { return states_.at(index); }

private:
    int modes_;
    int cutoff_;
    std::vector<std::vector<int>> states_;  // lexicographically sorted
};

using SparseOperator = Eigen::SparseMatrix<std::complex<double>>;
using FockVector = Eigen::SparseVector<std::complex<double>>;

/// Sparse linear map on a truncated Fock basis; immutable once built.
class FockOperator {
public:
    FockOperator(BasisInfo basis, SparseOperator matrix, int degree);

    const BasisInfo& basis() const noexcept { return basis_; }
    FockKind kind() const noexcept { return basis_.kind; }
    const SparseOperator& matrix() const noexcept { return matrix_; }
    int degree() const noexcept { return degree_; }

    FockOperator adjoint() const;
    FockVector apply(const FockVector& v) const;
    /// Largest entry of |T - T*|.
    double selfadjoint_defect() const;

    static FockOperator identity(const BasisInfo& basis);

    friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(std::complex<double> s, const FockOperator& a);

private:
    BasisInfo basis_;
    SparseOperator matrix_;
    int degree_;
};

FockOperator creation_free(const Eigen::VectorXd& f, const FreeFockBasis& basis);
FockOperator annihilation_free(const Eigen::VectorXd& f, const FreeFockBasis& basis);
/// G_0(f) = a(f) + a*(f).
FockOperator gaussian_free(const Eigen::VectorXd& f, const FreeFockBasis& basis);

FockOperator creation_bosonic(const Eigen::VectorXd& f, const BosonBasis& basis);
FockOperator annihilation_bosonic(const Eigen::VectorXd& f, const BosonBasis& basis);
/// G_1(f) = a(f) + a*(f) with CCR ladder factors.
FockOperator gaussian_bosonic(const Eigen::VectorXd& f, const BosonBasis& basis);

FockVector vacuum_vector(const BasisInfo& basis);

/// <Omega, T_1 ... T_p Omega>, folding right to left on sparse vectors.
/// Throws DimensionError on mixed bases and TruncationError when the summed degree exceeds the depth.
std::complex<double> vacuum_expectation(const std::vector<FockOperator>& ops);

/// Real vectors f_i (rows) with Gram matrix f f^T = cov; cov must be symmetric PSD.
Eigen::MatrixXd gram_factor(const Eigen::MatrixXd& cov);

/// G_0(f_i) for f = gram_factor(cov): a free semicircular family with covariance cov.
std::vector<FockOperator> semicircular_family(const Eigen::MatrixXd& cov, int depth);
/// G_1(f_i) for f = gram_factor(cov): a classical Gaussian family with covariance cov.
std::vector<FockOperator> gaussian_family(const Eigen::MatrixXd& cov, int cutoff);

}  // namespace opfree
