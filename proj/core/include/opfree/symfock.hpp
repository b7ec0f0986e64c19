#pragma once

// Cyclic coefficient matrices in M_n(M_m(C)) = M_{nm}(C) whose products isolate a single
// ordering of an n-fold tensor power.
//
// A_j carries I_m in block (j, j+1) (block (n, 1) for j = n), B_1 = A A_1 with A in the
// top-left m x m corner, and B_j = A_j otherwise. Block indices in comments are 1-based.

#include <cstddef>
#include <vector>

#include "opfree/matrix.hpp"
#include "opfree/report.hpp"

namespace opfree {

inline constexpr int kMaxSymmetrizationLength = 6;

struct CyclicCoefficients {
    int n = 0;                ///< tensor length
    int m = 0;                ///< inner matrix size
    Matrix a;                 ///< m x m
    std::vector<Matrix> cycle;  ///< A_1..A_n, each nm x nm
    std::vector<Matrix> b;      ///< B_1..B_n
};

/// Throws InvalidArgument for n < 2 or m < 1, DimensionError if `a` is not m x m.
CyclicCoefficients build_cyclic_coefficients(int n, int m, const Matrix& a);

/// B_sigma(1) ... B_sigma(n) for a 0-based permutation `sigma` of {0..n-1}.
Matrix permutation_product(const std::vector<int>& sigma, const CyclicCoefficients& cc);

/// `block` placed at block position (row, col) of an n x n grid of m x m blocks.
Matrix embed_block(const Matrix& block, int n, int row, int col);

/// Over all of S_n: (E_11 (x) I_m) B_sigma(1)...B_sigma(n) equals A in the corner for the identity
/// and 0 otherwise (exact comparison). Also records, per permutation, whether the uncompressed
/// product vanishes, flagging the non-identity cyclic shifts where it does not.
Report verify_symmetrization(int n, int m, const Matrix& a);

}  // namespace opfree
