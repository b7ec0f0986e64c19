#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace opfree {

using Complex = std::complex<double>;

/// Dense complex k x k matrix; models an element of B = M_k(C).
using Matrix = Eigen::MatrixXcd;

/// Default tolerance for matrix-valued equality (max entry modulus).
inline constexpr double kDefaultTolerance = 1e-10;

/// Largest entry modulus; the norm every tolerance in the toolkit refers to.
inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return max_abs(a - b);
}

inline bool is_selfadjoint(const Matrix& m, double tol = 1e-12) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

/// Spectral norm (largest singular value).
double operator_norm(const Matrix& m);

inline Matrix scalar_matrix(Complex value) {
    Matrix m(1, 1);
    m(0, 0) = value;
    return m;
}

/// Real and imaginary parts in the C*-sense: m = re + i*im with re, im selfadjoint.
inline Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) / 2.0; }
inline Matrix antihermitian_part(const Matrix& m) {
    return (m - m.adjoint()) / Complex(0.0, 2.0);
}

/// Matrix unit E_{row,col} of the given dimension.
Matrix matrix_unit(std::size_t dim, std::size_t row, std::size_t col);

}  // namespace opfree
