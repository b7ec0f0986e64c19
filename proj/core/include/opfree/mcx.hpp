#pragma once

// Operator-valued moment <-> cumulant transforms over non-crossing partitions.
//
// A word a_0 (x) b_1 a_1 (x) ... (x) b_{n-1} a_{n-1} is stored with the
// B-coefficient b_i sitting immediately left of element i. The alternative
// right placement a_0 b_1 (x) a_1 b_2 (x) ... denotes the same tensor over B
// and is normalised to the left form on construction.

#include <cstddef>
#include <functional>
#include <vector>

#include "opfree/matrix.hpp"
#include "opfree/ncpart.hpp"

namespace opfree {

class OpWord {
public:
    /// `coeffs[i - 1]` is the coefficient left of `elements[i]`; all coefficients are dim x dim.
    OpWord(std::size_t dim, std::vector<int> elements, std::vector<Matrix> coeffs);

    /// Coefficients given as a_0 b_1 (x) a_1 b_2 (x) ... ; equal over B to the left form.
    static OpWord right_placed(std::size_t dim, std::vector<int> elements, std::vector<Matrix> coeffs) {
        return OpWord(dim, std::move(elements), std::move(coeffs));
    }
    /// All interleaved coefficients equal to the identity of B.
    static OpWord plain(std::size_t dim, std::vector<int> elements);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t length() const noexcept { return elements_.size(); }
    const std::vector<int>& elements() const noexcept { return elements_; }
    const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }
    int element(std::size_t i) const { return elements_.at(i); }
    /// Coefficient left of element i (i >= 1).
    const Matrix& coeff_before(std::size_t i) const { return coeffs_.at(i - 1); }

private:
    std::size_t dim_;
    std::vector<int> elements_;
    std::vector<Matrix> coeffs_;
};

/// Evaluates k^(n) on a word of any order n.
using CumulantFn = std::function<Matrix(const OpWord&)>;

/// The conditional expectation phi applied to the interleaved product of a word.
struct MomentSource {
    std::size_t dim = 1;
    std::function<Matrix(const OpWord&)> evaluate;
};

/// k_pi[word], innermost blocks first; an inner block's value is absorbed into the
/// coefficient left of the element that follows it, outer components multiply left to right.
Matrix k_pi_evaluate(const NcPartition& pi, const OpWord& word, const CumulantFn& cumulant);
/// Same, rejecting crossing partitions with InvalidArgument.
Matrix k_pi_evaluate(const SetPartition& pi, const OpWord& word, const CumulantFn& cumulant);

/// mu^(n)(word) = sum over NC(n) of k_pi[word].
Matrix cumulants_to_moments(const OpWord& word, const CumulantFn& cumulant);

/// k^(n)(word) = mu^(n)(word) - sum over NC(n) minus the one-block partition of k_pi[word],
/// recursing on lower orders with a per-call memo.
Matrix moments_to_cumulants(const OpWord& word, const MomentSource& source);

/// xi_{p; i_0..i_p}(b_1..b_p) = k^(p+1)(X_{i_0} (x) b_1 X_{i_1} (x) ... (x) b_p X_{i_p}).
/// p = 0 gives the first cumulant of X_{i_0}.
Matrix xi_functional(const std::vector<int>& indices, const std::vector<Matrix>& b_args,
                     const MomentSource& source);

/// eta_{p; i_0..i_p}(b_1..b_p) = mu^(p+1)(X_{i_0} (x) b_1 X_{i_1} (x) ... (x) b_p X_{i_p}).
Matrix eta_functional(const std::vector<int>& indices, const std::vector<Matrix>& b_args,
                      const MomentSource& source);

}  // namespace opfree
