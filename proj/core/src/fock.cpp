#include "opfree/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opfree/errors.hpp"

namespace opfree {
namespace {

using Triplet = Eigen::Triplet<std::complex<double>>;

void check_vector(const Eigen::VectorXd& f, int modes, const char* what) {
    if (f.size() != modes)
        throw DimensionError(std::string(what) + ": vector length " + std::to_string(f.size()) +
                             " differs from mode count " + std::to_string(modes));
}

SparseOperator from_triplets(std::size_t size, const std::vector<Triplet>& triplets) {
    const auto n = static_cast<Eigen::Index>(size);
    SparseOperator m(n, n);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

void check_same_basis(const FockOperator& a, const FockOperator& b) {
    if (!(a.basis() == b.basis())) throw DimensionError("Fock operators live on different bases");
}

void grow_occupations(int mode, int modes, int remaining, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (mode == modes) {
        out.push_back(current);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        current[static_cast<std::size_t>(mode)] = k;
        grow_occupations(mode + 1, modes, remaining - k, current, out);
    }
    current[static_cast<std::size_t>(mode)] = 0;
}

}  // namespace

FreeFockBasis::FreeFockBasis(int modes, int depth) : modes_(modes), depth_(depth) {
    if (modes < 1) throw DimensionError("FreeFockBasis: at least one mode required");
    if (depth < 0) throw DimensionError("FreeFockBasis: negative depth");
    offsets_.push_back(0);
    powers_.push_back(1);
    for (int l = 0; l <= depth; ++l) {
        offsets_.push_back(offsets_.back() + powers_.back());
        powers_.push_back(powers_.back() * static_cast<std::size_t>(modes));
    }
}

std::size_t FreeFockBasis::index(const std::vector<int>& word) const {
    if (word.size() > static_cast<std::size_t>(depth_)) throw InvalidArgument("FreeFockBasis: word longer than depth");
    std::size_t rel = 0;
    for (int letter : word) {
        if (letter < 0 || letter >= modes_) throw InvalidArgument("FreeFockBasis: letter out of range");
        rel = rel * static_cast<std::size_t>(modes_) + static_cast<std::size_t>(letter);
    }
    return offsets_[word.size()] + rel;
}

int FreeFockBasis::level(std::size_t index) const {
    if (index >= size()) throw InvalidArgument("FreeFockBasis: index out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    return static_cast<int>(it - offsets_.begin()) - 1;
}

std::vector<int> FreeFockBasis::word(std::size_t index) const {
    const int l = level(index);
    std::size_t rel = index - offsets_[static_cast<std::size_t>(l)];
    std::vector<int> w(static_cast<std::size_t>(l));
    for (int k = l - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<int>(rel % static_cast<std::size_t>(modes_));
        rel /= static_cast<std::size_t>(modes_);
    }
    return w;
}

BosonBasis::BosonBasis(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
    if (modes < 1) throw DimensionError("BosonBasis: at least one mode required");
    if (cutoff < 0) throw DimensionError("BosonBasis: negative cutoff");
    std::vector<int> current(static_cast<std::size_t>(modes), 0);
    grow_occupations(0, modes, cutoff, current, states_);
}

std::size_t BosonBasis::index(const std::vector<int>& occupation) const {
    const auto it = std::lower_bound(states_.begin(), states_.end(), occupation);
    if (it == states_.end() || *it != occupation) throw InvalidArgument("BosonBasis: occupation not in basis");
    return static_cast<std::size_t>(it - states_.begin());
}

FockOperator::FockOperator(BasisInfo basis, SparseOperator matrix, int degree)
    : basis_(basis), matrix_(std::move(matrix)), degree_(degree) {
    if (basis_.size == 0) throw DimensionError("FockOperator: zero-dimensional basis");
    const auto n = static_cast<Eigen::Index>(basis_.size);
    if (matrix_.rows() != n || matrix_.cols() != n) throw DimensionError("FockOperator: matrix does not match basis");
    matrix_.makeCompressed();
}

FockOperator FockOperator::adjoint() const {
    return FockOperator(basis_, SparseOperator(matrix_.adjoint()), degree_);
}

FockVector FockOperator::apply(const FockVector& v) const {
    if (v.size() != matrix_.cols()) throw DimensionError("FockOperator::apply: vector size mismatch");
    return matrix_ * v;
}

double FockOperator::selfadjoint_defect() const {
    const SparseOperator diff = matrix_ - SparseOperator(matrix_.adjoint());
    double worst = 0.0;
    for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
        for (SparseOperator::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    return worst;
}

FockOperator FockOperator::identity(const BasisInfo& basis) {
    const auto n = static_cast<Eigen::Index>(basis.size);
    SparseOperator id(n, n);
    id.setIdentity();
    return FockOperator(basis, std::move(id), 0);
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    check_same_basis(a, b);
    return FockOperator(a.basis_, a.matrix_ + b.matrix_, std::max(a.degree_, b.degree_));
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    check_same_basis(a, b);
    return FockOperator(a.basis_, a.matrix_ - b.matrix_, std::max(a.degree_, b.degree_));
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    check_same_basis(a, b);
    return FockOperator(a.basis_, SparseOperator(a.matrix_ * b.matrix_), a.degree_ + b.degree_);
}

FockOperator operator*(std::complex<double> s, const FockOperator& a) {
    return FockOperator(a.basis_, SparseOperator(s * a.matrix_), a.degree_);
}

FockOperator creation_free(const Eigen::VectorXd& f, const FreeFockBasis& basis) {
    check_vector(f, basis.modes(), "creation_free");
    if (basis.depth() < 1) throw DimensionError("creation_free: depth must be at least 1");
    std::vector<Triplet> triplets;
    const auto m = static_cast<std::size_t>(basis.modes());
    for (int l = 0; l < basis.depth(); ++l) {
        const std::size_t from = basis.level_offset(l);
        const std::size_t count = basis.level_offset(l + 1) - from;
        const std::size_t to = basis.level_offset(l + 1);
        for (std::size_t rel = 0; rel < count; ++rel)
            for (std::size_t i = 0; i < m; ++i) {
                const double w = f(static_cast<Eigen::Index>(i));
                if (w == 0.0) continue;
                // letter i prepended to a word of length l
                triplets.emplace_back(static_cast<Eigen::Index>(to + i * count + rel),
                                      static_cast<Eigen::Index>(from + rel), w);
            }
    }
    return FockOperator(basis.info(), from_triplets(basis.size(), triplets), 1);
}

FockOperator annihilation_free(const Eigen::VectorXd& f, const FreeFockBasis& basis) {
    check_vector(f, basis.modes(), "annihilation_free");
    if (basis.depth() < 1) throw DimensionError("annihilation_free: depth must be at least 1");
    std::vector<Triplet> triplets;
    for (std::size_t idx = basis.level_offset(1); idx < basis.size(); ++idx) {
        auto w = basis.word(idx);
        const double weight = f(w.front());
        if (weight == 0.0) continue;
        w.erase(w.begin());
        triplets.emplace_back(static_cast<Eigen::Index>(basis.index(w)), static_cast<Eigen::Index>(idx), weight);
    }
    return FockOperator(basis.info(), from_triplets(basis.size(), triplets), 1);
}

FockOperator gaussian_free(const Eigen::VectorXd& f, const FreeFockBasis& basis) {
    return annihilation_free(f, basis) + creation_free(f, basis);
}

FockOperator creation_bosonic(const Eigen::VectorXd& f, const BosonBasis& basis) {
    check_vector(f, basis.modes(), "creation_bosonic");
    std::vector<Triplet> triplets;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        auto occ = basis.occupation(idx);
        int total = 0;
        for (int n : occ) total += n;
        if (total >= basis.cutoff()) continue;
        for (int i = 0; i < basis.modes(); ++i) {
            const double w = f(i);
            if (w == 0.0) continue;
            auto& slot = occ[static_cast<std::size_t>(i)];
            const double factor = std::sqrt(static_cast<double>(slot + 1));
            ++slot;
            triplets.emplace_back(static_cast<Eigen::Index>(basis.index(occ)), static_cast<Eigen::Index>(idx), w * factor);
            --slot;
        }
    }
    return FockOperator(basis.info(), from_triplets(basis.size(), triplets), 1);
}

FockOperator annihilation_bosonic(const Eigen::VectorXd& f, const BosonBasis& basis) {
    check_vector(f, basis.modes(), "annihilation_bosonic");
    std::vector<Triplet> triplets;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        auto occ = basis.occupation(idx);
        for (int i = 0; i < basis.modes(); ++i) {
            const double w = f(i);
            auto& slot = occ[static_cast<std::size_t>(i)];
            if (w == 0.0 || slot == 0) continue;
            const double factor = std::sqrt(static_cast<double>(slot));
            --slot;
            triplets.emplace_back(static_cast<Eigen::Index>(basis.index(occ)), static_cast<Eigen::Index>(idx), w * factor);
            ++slot;
        }
    }
    return FockOperator(basis.info(), from_triplets(basis.size(), triplets), 1);
}

FockOperator gaussian_bosonic(const Eigen::VectorXd& f, const BosonBasis& basis) {
    return annihilation_bosonic(f, basis) + creation_bosonic(f, basis);
}

FockVector vacuum_vector(const BasisInfo& basis) {
    FockVector v(static_cast<Eigen::Index>(basis.size));
    v.insert(0) = 1.0;
    return v;
}

std::complex<double> vacuum_expectation(const std::vector<FockOperator>& ops) {
    if (ops.empty()) return 1.0;
    const BasisInfo& basis = ops.front().basis();
    int degree = 0;
    for (const auto& op : ops) {
        if (!(op.basis() == basis)) throw DimensionError("vacuum_expectation: operators live on different bases");
        degree += op.degree();
    }
    if (degree > basis.depth)
        throw TruncationError("vacuum_expectation: product of degree " + std::to_string(degree) +
                              " exceeds truncation depth " + std::to_string(basis.depth) + " (truncation-unsound)");
    FockVector v = vacuum_vector(basis);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        v = it->apply(v);
        if (v.nonZeros() == 0) return 0.0;
    }
    return v.coeff(0);
}

Eigen::MatrixXd gram_factor(const Eigen::MatrixXd& cov) {
    if (cov.rows() != cov.cols()) throw DimensionError("gram_factor: covariance is not square");
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() == Eigen::Success) return llt.matrixL();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    if (eig.eigenvalues().minCoeff() < -1e-10) throw InvalidArgument("gram_factor: covariance is not PSD");
    const Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * roots.asDiagonal();
}

std::vector<FockOperator> semicircular_family(const Eigen::MatrixXd& cov, int depth) {
    const Eigen::MatrixXd f = gram_factor(cov);
    FreeFockBasis basis(static_cast<int>(f.cols()), depth);
    std::vector<FockOperator> out;
    for (Eigen::Index i = 0; i < f.rows(); ++i) out.push_back(gaussian_free(f.row(i).transpose(), basis));
    return out;
}

std::vector<FockOperator> gaussian_family(const Eigen::MatrixXd& cov, int cutoff) {
    const Eigen::MatrixXd f = gram_factor(cov);
    BosonBasis basis(static_cast<int>(f.cols()), cutoff);
    std::vector<FockOperator> out;
    for (Eigen::Index i = 0; i < f.rows(); ++i) out.push_back(gaussian_bosonic(f.row(i).transpose(), basis));
    return out;
}

}  // namespace opfree
