#pragma once

// Closed-form Gaussian-type moments: free (non-crossing pairings), classical
// (all pairings) and star-moments of circular / complex semicircular elements.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace opfree {

/// Named selfadjoint variables with real covariance cov(i, j) = phi(x_i x_j).
class CovarianceSpec {
public:
    /// Throws InvalidArgument unless cov is square, symmetric to 1e-12 and PSD to -1e-10.
    CovarianceSpec(std::vector<std::string> names, Eigen::MatrixXd cov);

    /// m variables with identity covariance, named x1..xm.
    static CovarianceSpec identity(int m);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const Eigen::MatrixXd& cov() const noexcept { return cov_; }
    double operator()(int i, int j) const { return cov_(i, j); }

private:
    std::vector<std::string> names_;
    Eigen::MatrixXd cov_;
};

inline constexpr int kMaxWickLength = 14;

/// Sum over non-crossing pairings of products of covariances (0 for odd length).
double free_wick_moment(const std::vector<int>& word, const CovarianceSpec& spec);

/// Sum over all pairings of products of covariances.
double classical_wick_moment(const std::vector<int>& word, const CovarianceSpec& spec);

struct StarLetter {
    int index = 0;      ///< which c_j
    bool star = false;  ///< c_j* instead of c_j
};
using StarWord = std::vector<StarLetter>;

/// phi of a word in c_j, c_j* where c_j = s_{2j} + i s_{2j+1} and `real_parts`
/// is the covariance of the selfadjoint family s_0, s_1, ... (size 2 * #c).
/// Each letter is expanded into its real and imaginary part and every real
/// word is evaluated with free_wick_moment.
std::complex<double> circular_star_moment(const StarWord& word, const CovarianceSpec& real_parts);

}  // namespace opfree
