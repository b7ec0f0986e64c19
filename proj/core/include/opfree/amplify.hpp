#pragma once

// Matrix amplification: elements sum_j A_j (x) x_j of M_k(C) (x) A realised on
// C^k (x) F, the block conditional expectation id (x) <Omega, . Omega>, and the
// randomized checks built on them.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "opfree/fock.hpp"
#include "opfree/matrix.hpp"
#include "opfree/mcx.hpp"
#include "opfree/report.hpp"
#include "opfree/wick.hpp"

namespace opfree {

/// Operator on C^k (x) F; row/column index r * dim(F) + i addresses block r, Fock basis vector i.
class BlockOperator {
public:
    BlockOperator(std::size_t dim, BasisInfo basis, SparseOperator matrix, int degree);

    /// b (x) 1
    static BlockOperator lift(const Matrix& b, const BasisInfo& basis);
    /// a (x) x
    static BlockOperator tensor(const Matrix& a, const FockOperator& x);

    std::size_t dim() const noexcept { return dim_; }
    const BasisInfo& basis() const noexcept { return basis_; }
    const SparseOperator& matrix() const noexcept { return matrix_; }
    int degree() const noexcept { return degree_; }

    BlockOperator adjoint() const;

    friend BlockOperator operator+(const BlockOperator& a, const BlockOperator& b);
    friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);

private:
    std::size_t dim_;
    BasisInfo basis_;
    SparseOperator matrix_;
    int degree_;
};

/// Entry (r, s) is <Omega, T_{rs} Omega>.
Matrix block_expectation(const BlockOperator& t);

/// block_expectation(T_1 ... T_p), evaluated by applying the factors to Omega
/// rather than forming the product. Refuses products deeper than the truncation.
Matrix block_expectation_of_product(const std::vector<BlockOperator>& factors);

class AmplifiedElement {
public:
    /// Throws DimensionError unless lists have equal length, coefficients share one square
    /// dimension and the Fock operators share one basis.
    AmplifiedElement(std::vector<Matrix> coeffs, std::vector<FockOperator> xs);

    std::size_t dim() const noexcept { return dim_; }
    const BasisInfo& basis() const { return xs_.front().basis(); }
    const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }
    const std::vector<FockOperator>& xs() const noexcept { return xs_; }
    int degree() const noexcept;

    /// sum_j A_j (x) x_j as an operator on C^k (x) F.
    BlockOperator realize() const;
    /// Realised operator equals its adjoint to `tol`.
    bool is_selfadjoint(double tol = 1e-12) const;

private:
    std::size_t dim_;
    std::vector<Matrix> coeffs_;
    std::vector<FockOperator> xs_;
};

AmplifiedElement amplify(std::vector<Matrix> coeffs, std::vector<FockOperator> xs);

/// MomentSource over a family of amplified elements; word handles index `family`.
MomentSource amplified_moment_source(const std::vector<AmplifiedElement>& family);

/// eta_p(B_1..B_p) = block_expectation(x (B_1 (x) 1) x ... (B_p (x) 1) x).
Matrix opvalued_moment(const AmplifiedElement& x, const std::vector<Matrix>& b_args);
/// xi_p(B_1..B_p): the order p+1 operator-valued cumulant of the same word.
Matrix opvalued_cumulant(const AmplifiedElement& x, const std::vector<Matrix>& b_args);

struct TrialConfig {
    std::size_t trials = 50;
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
};

/// Random selfadjoint amplifications of a semicircular family with covariance `family`
/// have vanishing xi_p for every p in [0, p_max] other than 1.
Report verify_amplified_semicircularity(const CovarianceSpec& family, std::size_t coeff_dim, int p_max,
                                        const TrialConfig& config);

struct DetectionOptions {
    int order = 2;                     ///< p; coefficients are (p+1) x (p+1)
    double relative_threshold = 0.5;   ///< detection iff ||xi_p||_op > threshold * max_j ||A_j||_op^(p+1)
};

/// For random selfadjoint A_j, evaluates xi_p(I, ..., I) of sum_j A_j x_j. A
/// non-semicircular family is caught by a nonzero value; pass iff some trial detects.
Report detect_nonsemicircular(const std::vector<FockOperator>& family, const DetectionOptions& options,
                              const TrialConfig& config);

/// Operator-side block expectations of products of amplified semicirculars against
/// the combinatorial expansion sum A_{1,j_1} ... A_{m,j_m} sum_{NCPP} prod cov, for word lengths 1..max_length.
Report verify_amplified_wick_chain(const CovarianceSpec& generators, int max_length, std::size_t coeff_dim,
                                   const TrialConfig& config);

/// A complex family c_j = sum_t weights(j, t) y_t over selfadjoint Fock generators y_t.
struct ComplexFamily {
    std::vector<FockOperator> generators;
    Eigen::MatrixXcd weights;
};

/// The circular element (G_0(e_1) + i G_0(e_2)) / sqrt(2) on a two-mode free Fock space.
ComplexFamily standard_circular(int depth);

/// For random complex A_j, splits c = sum A_j c_j into s_1 + i s_2 and checks that s_1, s_2
/// and the sampled selfadjoint combinations b_1 s_1 + b_2 s_2 have vanishing xi_p (p != 1, p <= p_max).
/// Also checks positivity of <c, c> = phi(c* c). Inconclusive if no combination could be tested.
Report complex_semicircular_check(const ComplexFamily& family, std::size_t coeff_dim, int p_max,
                                  const TrialConfig& config);

/// Fock-side star moments of sqrt(variance) (G_0(e_1) + i G_0(e_2)) against circular_star_moment,
/// over every star word of length 1..max_length.
Report verify_circular_star_moments(int max_length, double variance, double tolerance);

}  // namespace opfree
