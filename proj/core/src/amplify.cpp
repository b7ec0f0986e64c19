#include "opfree/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include "opfree/errors.hpp"
#include "opfree/random.hpp"

namespace opfree {
namespace {

using Triplet = Eigen::Triplet<Complex>;

std::string describe(const char* what, std::size_t trials, std::uint64_t seed, std::size_t dim) {
    std::ostringstream os;
    os << what << " trials=" << trials << " seed=" << seed << " dim=" << dim;
    return os.str();
}

// State of T (e_s (x) Omega) for s = 0..k-1, one column per s.
class BlockState {
public:
    BlockState(std::size_t dim, const BasisInfo& basis)
        : dim_(static_cast<Eigen::Index>(dim)), fock_(static_cast<Eigen::Index>(basis.size)),
          data_(Matrix::Zero(dim_ * fock_, dim_)) {
        for (Eigen::Index s = 0; s < dim_; ++s) data_(s * fock_, s) = 1.0;
    }

    void apply(const SparseOperator& op) { data_ = op * data_; }

    // (b (x) 1): on each column viewed as an F x k array with one column per block, right-multiply by b^T.
    void apply_coefficient(const Matrix& b) {
        for (Eigen::Index c = 0; c < dim_; ++c) {
            Eigen::Map<Matrix> blocks(data_.col(c).data(), fock_, dim_);
            Matrix updated = blocks * b.transpose();
            blocks = updated;
        }
    }

    Matrix expectation() const {
        Matrix e(dim_, dim_);
        for (Eigen::Index r = 0; r < dim_; ++r)
            for (Eigen::Index s = 0; s < dim_; ++s) e(r, s) = data_(r * fock_, s);
        return e;
    }

private:
    Eigen::Index dim_;
    Eigen::Index fock_;
    Matrix data_;
};

void check_depth(int degree, const BasisInfo& basis, const char* what) {
    if (degree > basis.depth)
        throw TruncationError(std::string(what) + ": product of degree " + std::to_string(degree) +
                              " exceeds truncation depth " + std::to_string(basis.depth) + " (truncation-unsound)");
}

std::vector<Matrix> random_selfadjoint_list(std::size_t count, std::size_t dim, std::mt19937_64& rng) {
    std::vector<Matrix> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_selfadjoint(dim, rng));
    return out;
}

// Largest |xi_p| over p in [0, p_max] \ {1}, with fresh selfadjoint B's per order.
struct OrderMaxima {
    std::vector<double> per_order;  // index p
};

void accumulate_xi(const AmplifiedElement& x, int p_max, std::mt19937_64& rng, OrderMaxima& acc) {
    const MomentSource source = amplified_moment_source({x});
    acc.per_order.resize(static_cast<std::size_t>(p_max) + 1, 0.0);
    for (int p = 0; p <= p_max; ++p) {
        if (p == 1) continue;
        const auto bs = random_selfadjoint_list(static_cast<std::size_t>(p), x.dim(), rng);
        const std::vector<int> indices(static_cast<std::size_t>(p) + 1, 0);
        const double v = max_abs(xi_functional(indices, bs, source));
        auto& slot = acc.per_order[static_cast<std::size_t>(p)];
        slot = std::max(slot, v);
    }
}

void emit_order_checks(Report& report, const std::string& label, const OrderMaxima& acc, const std::string& inputs,
                       double tol) {
    for (std::size_t p = 0; p < acc.per_order.size(); ++p) {
        if (p == 1) continue;
        report.add(bound_check(label + "xi_" + std::to_string(p), inputs, acc.per_order[p], tol));
    }
}

// Hermitian basis of M_k: E_rr, E_rs + E_sr, i(E_rs - E_sr).
std::vector<Matrix> hermitian_basis(std::size_t dim) {
    std::vector<Matrix> basis;
    for (std::size_t r = 0; r < dim; ++r) basis.push_back(matrix_unit(dim, r, r));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t s = r + 1; s < dim; ++s) {
            basis.push_back(matrix_unit(dim, r, s) + matrix_unit(dim, s, r));
            basis.push_back(Complex(0.0, 1.0) * (matrix_unit(dim, r, s) - matrix_unit(dim, s, r)));
        }
    return basis;
}

// Selfadjoint matrices commuting with every member of `mats`, as a real-linear basis.
std::vector<Matrix> selfadjoint_commutant(const std::vector<Matrix>& mats, std::size_t dim) {
    const auto herm = hermitian_basis(dim);
    const auto k = static_cast<Eigen::Index>(dim);
    const Eigen::Index rows = 2 * k * k * static_cast<Eigen::Index>(std::max<std::size_t>(mats.size(), 1));
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(herm.size()));
    for (std::size_t q = 0; q < herm.size(); ++q) {
        Eigen::Index row = 0;
        for (const auto& m : mats) {
            const Matrix comm = herm[q] * m - m * herm[q];
            for (Eigen::Index e = 0; e < comm.size(); ++e) {
                system(row++, static_cast<Eigen::Index>(q)) = comm.data()[e].real();
                system(row++, static_cast<Eigen::Index>(q)) = comm.data()[e].imag();
            }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    lu.setThreshold(1e-9);
    const Eigen::MatrixXd kernel = lu.kernel();
    std::vector<Matrix> out;
    if (lu.dimensionOfKernel() == 0) return out;
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
        Matrix b = Matrix::Zero(k, k);
        for (std::size_t q = 0; q < herm.size(); ++q) b += kernel(static_cast<Eigen::Index>(q), c) * herm[q];
        out.push_back(b);
    }
    return out;
}

}  // namespace

BlockOperator::BlockOperator(std::size_t dim, BasisInfo basis, SparseOperator matrix, int degree)
    : dim_(dim), basis_(basis), matrix_(std::move(matrix)), degree_(degree) {
    const auto n = static_cast<Eigen::Index>(dim_ * basis_.size);
    if (dim_ == 0) throw DimensionError("BlockOperator: zero coefficient dimension");
    if (matrix_.rows() != n || matrix_.cols() != n) throw DimensionError("BlockOperator: matrix size mismatch");
    matrix_.makeCompressed();
}

BlockOperator BlockOperator::lift(const Matrix& b, const BasisInfo& basis) {
    if (b.rows() != b.cols()) throw DimensionError("BlockOperator::lift: coefficient not square");
    const auto k = static_cast<std::size_t>(b.rows());
    const auto n = static_cast<Eigen::Index>(basis.size);
    std::vector<Triplet> triplets;
    for (Eigen::Index r = 0; r < b.rows(); ++r)
        for (Eigen::Index s = 0; s < b.cols(); ++s) {
            if (b(r, s) == Complex(0.0)) continue;
            for (Eigen::Index i = 0; i < n; ++i) triplets.emplace_back(r * n + i, s * n + i, b(r, s));
        }
    SparseOperator m(static_cast<Eigen::Index>(k) * n, static_cast<Eigen::Index>(k) * n);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return BlockOperator(k, basis, std::move(m), 0);
}

BlockOperator BlockOperator::tensor(const Matrix& a, const FockOperator& x) {
    if (a.rows() != a.cols()) throw DimensionError("BlockOperator::tensor: coefficient not square");
    const auto k = static_cast<std::size_t>(a.rows());
    const auto n = static_cast<Eigen::Index>(x.basis().size);
    std::vector<Triplet> triplets;
    const SparseOperator& xm = x.matrix();
    for (Eigen::Index col = 0; col < xm.outerSize(); ++col)
        for (SparseOperator::InnerIterator it(xm, col); it; ++it)
            for (Eigen::Index r = 0; r < a.rows(); ++r)
                for (Eigen::Index s = 0; s < a.cols(); ++s) {
                    if (a(r, s) == Complex(0.0)) continue;
                    triplets.emplace_back(r * n + it.row(), s * n + it.col(), a(r, s) * it.value());
                }
    SparseOperator m(static_cast<Eigen::Index>(k) * n, static_cast<Eigen::Index>(k) * n);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return BlockOperator(k, x.basis(), std::move(m), x.degree());
}

BlockOperator BlockOperator::adjoint() const {
    return BlockOperator(dim_, basis_, SparseOperator(matrix_.adjoint()), degree_);
}

BlockOperator operator+(const BlockOperator& a, const BlockOperator& b) {
    if (a.dim_ != b.dim_ || !(a.basis_ == b.basis_)) throw DimensionError("BlockOperator: operand mismatch");
    return BlockOperator(a.dim_, a.basis_, a.matrix_ + b.matrix_, std::max(a.degree_, b.degree_));
}

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
    if (a.dim_ != b.dim_ || !(a.basis_ == b.basis_)) throw DimensionError("BlockOperator: operand mismatch");
    return BlockOperator(a.dim_, a.basis_, SparseOperator(a.matrix_ * b.matrix_), a.degree_ + b.degree_);
}

Matrix block_expectation(const BlockOperator& t) {
    const auto k = static_cast<Eigen::Index>(t.dim());
    const auto n = static_cast<Eigen::Index>(t.basis().size);
    Matrix e(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index s = 0; s < k; ++s) e(r, s) = t.matrix().coeff(r * n, s * n);
    return e;
}

Matrix block_expectation_of_product(const std::vector<BlockOperator>& factors) {
    if (factors.empty()) throw InvalidArgument("block_expectation_of_product: empty product");
    const auto& first = factors.front();
    int degree = 0;
    for (const auto& f : factors) {
        if (f.dim() != first.dim() || !(f.basis() == first.basis()))
            throw DimensionError("block_expectation_of_product: factors on different spaces");
        degree += f.degree();
    }
    check_depth(degree, first.basis(), "block_expectation_of_product");
    BlockState state(first.dim(), first.basis());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) state.apply(it->matrix());
    return state.expectation();
}

AmplifiedElement::AmplifiedElement(std::vector<Matrix> coeffs, std::vector<FockOperator> xs)
    : dim_(0), coeffs_(std::move(coeffs)), xs_(std::move(xs)) {
    if (coeffs_.size() != xs_.size()) throw DimensionError("amplify: coefficient and operator counts differ");
    if (coeffs_.empty()) throw DimensionError("amplify: at least one term required");
    dim_ = static_cast<std::size_t>(coeffs_.front().rows());
    if (dim_ == 0) throw DimensionError("amplify: empty coefficient matrix");
    for (const auto& a : coeffs_)
        if (static_cast<std::size_t>(a.rows()) != dim_ || static_cast<std::size_t>(a.cols()) != dim_)
            throw DimensionError("amplify: coefficient matrices differ in dimension");
    for (const auto& x : xs_)
        if (!(x.basis() == xs_.front().basis())) throw DimensionError("amplify: operators live on different bases");
}

int AmplifiedElement::degree() const noexcept {
    int d = 0;
    for (const auto& x : xs_) d = std::max(d, x.degree());
    return d;
}

BlockOperator AmplifiedElement::realize() const {
    BlockOperator total = BlockOperator::tensor(coeffs_.front(), xs_.front());
    for (std::size_t j = 1; j < xs_.size(); ++j) total = total + BlockOperator::tensor(coeffs_[j], xs_[j]);
    return total;
}

bool AmplifiedElement::is_selfadjoint(double tol) const {
    const BlockOperator t = realize();
    const SparseOperator diff = t.matrix() - SparseOperator(t.matrix().adjoint());
    for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
        for (SparseOperator::InnerIterator it(diff, k); it; ++it)
            if (std::abs(it.value()) > tol) return false;
    return true;
}

AmplifiedElement amplify(std::vector<Matrix> coeffs, std::vector<FockOperator> xs) {
    return AmplifiedElement(std::move(coeffs), std::move(xs));
}

MomentSource amplified_moment_source(const std::vector<AmplifiedElement>& family) {
    if (family.empty()) throw InvalidArgument("amplified_moment_source: empty family");
    struct Realised {
        std::vector<BlockOperator> ops;
        std::size_t dim;
        BasisInfo basis;
    };
    auto shared = std::make_shared<Realised>();
    shared->dim = family.front().dim();
    shared->basis = family.front().basis();
    for (const auto& x : family) {
        if (x.dim() != shared->dim || !(x.basis() == shared->basis))
            throw DimensionError("amplified_moment_source: family members on different spaces");
        shared->ops.push_back(x.realize());
    }
    MomentSource source;
    source.dim = shared->dim;
    source.evaluate = [shared](const OpWord& word) -> Matrix {
        int degree = 0;
        for (int e : word.elements()) {
            if (e < 0 || static_cast<std::size_t>(e) >= shared->ops.size())
                throw InvalidArgument("amplified_moment_source: element handle out of range");
            degree += shared->ops[static_cast<std::size_t>(e)].degree();
        }
        check_depth(degree, shared->basis, "amplified moment");
        BlockState state(shared->dim, shared->basis);
        for (std::size_t i = word.length(); i-- > 0;) {
            state.apply(shared->ops[static_cast<std::size_t>(word.element(i))].matrix());
            if (i > 0) state.apply_coefficient(word.coeff_before(i));
        }
        return state.expectation();
    };
    return source;
}

Matrix opvalued_moment(const AmplifiedElement& x, const std::vector<Matrix>& b_args) {
    const std::vector<int> indices(b_args.size() + 1, 0);
    return eta_functional(indices, b_args, amplified_moment_source({x}));
}

Matrix opvalued_cumulant(const AmplifiedElement& x, const std::vector<Matrix>& b_args) {
    const std::vector<int> indices(b_args.size() + 1, 0);
    return xi_functional(indices, b_args, amplified_moment_source({x}));
}

Report verify_amplified_semicircularity(const CovarianceSpec& family, std::size_t coeff_dim, int p_max,
                                        const TrialConfig& config) {
    if (p_max < 0) throw InvalidArgument("verify_amplified_semicircularity: negative p_max");
    Report report;
    report.suite = "amplified-semicircularity";
    const auto xs = semicircular_family(family.cov(), p_max + 1);
    const auto n = static_cast<std::size_t>(family.size());
    const auto k = static_cast<Eigen::Index>(coeff_dim);
    OrderMaxima acc;
    double first_order_defect = 0.0;
    for (std::size_t t = 0; t < config.trials; ++t) {
        auto rng = trial_stream(config.seed, t);
        auto coeffs = random_selfadjoint_list(n, coeff_dim, rng);
        const AmplifiedElement x(coeffs, xs);
        accumulate_xi(x, p_max, rng, acc);
        if (p_max >= 1) {
            // xi_1(B) = sum_{i,j} A_i B A_j phi(x_i x_j)
            const Matrix b = random_selfadjoint(coeff_dim, rng);
            Matrix expected = Matrix::Zero(k, k);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    expected += coeffs[i] * b * coeffs[j] * family(static_cast<int>(i), static_cast<int>(j));
            const Matrix got = opvalued_cumulant(x, {b});
            first_order_defect = std::max(first_order_defect, max_abs_diff(got, expected));
        }
    }
    if (config.trials == 0) {
        report.observations.push_back("no trials requested; vacuous pass");
        return report;
    }
    const std::string inputs = describe("amplified-semicircularity", config.trials, config.seed, coeff_dim) +
                               " vars=" + std::to_string(n) + " p_max=" + std::to_string(p_max);
    emit_order_checks(report, "", acc, inputs, config.tolerance);
    if (p_max >= 1) report.add(bound_check("xi_1 covariance form", inputs, first_order_defect, config.tolerance));
    return report;
}

Report detect_nonsemicircular(const std::vector<FockOperator>& family, const DetectionOptions& options,
                              const TrialConfig& config) {
    if (family.empty()) throw InvalidArgument("detect_nonsemicircular: empty family");
    if (options.order < 0) throw InvalidArgument("detect_nonsemicircular: negative order");
    const auto size = static_cast<std::size_t>(options.order) + 1;
    Report report;
    report.suite = "detect-nonsemicircular";
    std::size_t detections = 0;
    double worst_ratio = 0.0;
    double min_ratio = std::numeric_limits<double>::infinity();
    const std::vector<Matrix> identities(static_cast<std::size_t>(options.order),
                                         Matrix::Identity(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size)));
    for (std::size_t t = 0; t < config.trials; ++t) {
        auto rng = trial_stream(config.seed, t);
        const auto coeffs = random_selfadjoint_list(family.size(), size, rng);
        double scale = 0.0;
        for (const auto& a : coeffs) scale = std::max(scale, operator_norm(a));
        scale = std::pow(scale, options.order + 1);
        const AmplifiedElement x(coeffs, family);
        const double value = operator_norm(opvalued_cumulant(x, identities));
        const double ratio = scale > 0.0 ? value / scale : 0.0;
        worst_ratio = std::max(worst_ratio, ratio);
        min_ratio = std::min(min_ratio, ratio);
        if (ratio > options.relative_threshold) ++detections;
    }
    const std::string inputs = describe("detect-nonsemicircular", config.trials, config.seed, size) +
                               " order=" + std::to_string(options.order) +
                               " family=" + std::to_string(family.size());
    CheckRecord rec;
    rec.name = "detections";
    rec.inputs = inputs;
    rec.value = static_cast<double>(detections);
    rec.threshold = 1.0;
    rec.status = detections >= 1 ? Status::Pass : Status::Fail;
    {
        std::ostringstream os;
        os << detections << "/" << config.trials << " trials above " << options.relative_threshold
           << " x max||A||^" << options.order + 1;
        rec.note = os.str();
    }
    report.add(rec);
    CheckRecord ratio;
    ratio.name = "max relative xi";
    ratio.inputs = inputs;
    ratio.value = worst_ratio;
    ratio.threshold = options.relative_threshold;
    ratio.status = Status::Pass;
    ratio.note = "informational; min over trials " + std::to_string(config.trials ? min_ratio : 0.0);
    report.add(ratio);
    return report;
}

Report verify_amplified_wick_chain(const CovarianceSpec& generators, int max_length, std::size_t coeff_dim,
                                   const TrialConfig& config) {
    if (max_length < 1) throw InvalidArgument("verify_amplified_wick_chain: max_length must be positive");
    Report report;
    report.suite = "amplified-wick-chain";
    const int n = generators.size();
    const auto xs = semicircular_family(generators.cov(), max_length);
    const std::string base = describe("amplified-wick-chain", config.trials, config.seed, coeff_dim) +
                             " vars=" + std::to_string(n);

    // The Fock realisation is an isometry: <f_i, f_j> = phi(x_i x_j).
    const Eigen::MatrixXd f = gram_factor(generators.cov());
    report.add(bound_check("isometry", base, (f * f.transpose() - generators.cov()).cwiseAbs().maxCoeff(),
                           config.tolerance));

    // Scalar link: vacuum expectations of G_0 products follow the non-crossing pairing sum.
    double scalar_defect = 0.0;
    for (int len = 1; len <= max_length; ++len) {
        std::vector<int> word(static_cast<std::size_t>(len), 0);
        while (true) {
            std::vector<FockOperator> ops;
            for (int v : word) ops.push_back(xs[static_cast<std::size_t>(v)]);
            scalar_defect = std::max(scalar_defect, std::abs(vacuum_expectation(ops) - free_wick_moment(word, generators)));
            std::size_t pos = 0;
            while (pos < word.size() && ++word[pos] == n) word[pos++] = 0;
            if (pos == word.size()) break;
        }
    }
    report.add(bound_check("fock vs non-crossing pairing sum", base, scalar_defect, config.tolerance));

    if (config.trials == 0) return report;
    for (int len = 1; len <= max_length; ++len) {
        double defect = 0.0;
        for (std::size_t t = 0; t < config.trials; ++t) {
            auto rng = trial_stream(config.seed, t * 64 + static_cast<std::size_t>(len));
            std::vector<std::vector<Matrix>> coeffs;
            std::vector<BlockOperator> factors;
            for (int l = 0; l < len; ++l) {
                coeffs.push_back(random_selfadjoint_list(static_cast<std::size_t>(n), coeff_dim, rng));
                factors.push_back(AmplifiedElement(coeffs.back(), xs).realize());
            }
            const Matrix operator_side = block_expectation_of_product(factors);

            const auto k = static_cast<Eigen::Index>(coeff_dim);
            Matrix combinatorial = Matrix::Zero(k, k);
            std::vector<int> tuple(static_cast<std::size_t>(len), 0);
            while (true) {
                const double w = free_wick_moment(tuple, generators);
                if (w != 0.0) {
                    Matrix prod = coeffs[0][static_cast<std::size_t>(tuple[0])];
                    for (int l = 1; l < len; ++l)
                        prod = prod * coeffs[static_cast<std::size_t>(l)][static_cast<std::size_t>(tuple[static_cast<std::size_t>(l)])];
                    combinatorial += w * prod;
                }
                std::size_t pos = 0;
                while (pos < tuple.size() && ++tuple[pos] == n) tuple[pos++] = 0;
                if (pos == tuple.size()) break;
            }
            defect = std::max(defect, max_abs_diff(operator_side, combinatorial));
        }
        report.add(bound_check("chain m=" + std::to_string(len), base + " m=" + std::to_string(len), defect,
                               config.tolerance));
    }
    return report;
}

ComplexFamily standard_circular(int depth) {
    const auto xs = semicircular_family(Eigen::MatrixXd::Identity(2, 2), depth);
    ComplexFamily family;
    family.generators = xs;
    family.weights.resize(1, 2);
    family.weights(0, 0) = 1.0 / std::sqrt(2.0);
    family.weights(0, 1) = Complex(0.0, 1.0 / std::sqrt(2.0));
    return family;
}

Report complex_semicircular_check(const ComplexFamily& family, std::size_t coeff_dim, int p_max,
                                  const TrialConfig& config) {
    if (family.generators.empty()) throw InvalidArgument("complex_semicircular_check: no generators");
    if (static_cast<std::size_t>(family.weights.cols()) != family.generators.size())
        throw DimensionError("complex_semicircular_check: weight columns differ from generator count");
    Report report;
    report.suite = "complex-semicircular";
    const auto gens = family.generators.size();
    const auto members = static_cast<std::size_t>(family.weights.rows());
    const auto k = static_cast<Eigen::Index>(coeff_dim);
    const std::string inputs = describe("complex-semicircular", config.trials, config.seed, coeff_dim) +
                               " members=" + std::to_string(members) + " generators=" + std::to_string(gens) +
                               " p_max=" + std::to_string(p_max);

    // phi(y_t y_u) of the generators, read off the Fock model.
    Eigen::MatrixXcd second(static_cast<Eigen::Index>(gens), static_cast<Eigen::Index>(gens));
    for (std::size_t t = 0; t < gens; ++t)
        for (std::size_t u = 0; u < gens; ++u)
            second(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(u)) =
                vacuum_expectation({family.generators[t], family.generators[u]});

    OrderMaxima real_acc, imag_acc, combo_acc;
    std::size_t combos = 0, commuting = 0;
    double positivity_defect = 0.0;
    double min_eigen = std::numeric_limits<double>::infinity();
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        auto rng = trial_stream(config.seed, trial);
        std::vector<Matrix> a;
        for (std::size_t j = 0; j < members; ++j) a.push_back(random_complex(coeff_dim, rng));
        std::vector<Matrix> c(gens, Matrix::Zero(k, k)), re, im;
        for (std::size_t t = 0; t < gens; ++t) {
            for (std::size_t j = 0; j < members; ++j)
                c[t] += family.weights(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(t)) * a[j];
            re.push_back(hermitian_part(c[t]));
            im.push_back(antihermitian_part(c[t]));
        }
        accumulate_xi(AmplifiedElement(re, family.generators), p_max, rng, real_acc);
        accumulate_xi(AmplifiedElement(im, family.generators), p_max, rng, imag_acc);

        // Sampled selfadjoint combinations b_1 s_1 + b_2 s_2.
        std::vector<std::pair<Matrix, Matrix>> pairs;
        std::normal_distribution<double> normal;
        for (int s = 0; s < 2; ++s) {
            const Matrix id = Matrix::Identity(k, k);
            pairs.emplace_back(normal(rng) * id, normal(rng) * id);
        }
        std::vector<Matrix> all = re;
        all.insert(all.end(), im.begin(), im.end());
        const auto commutant = selfadjoint_commutant(all, coeff_dim);
        if (commutant.size() > 1) {
            Matrix b = Matrix::Zero(k, k);
            for (const auto& basis_elem : commutant) b += normal(rng) * basis_elem;
            pairs.emplace_back(b, b);
            ++commuting;
        }
        for (const auto& [b1, b2] : pairs) {
            std::vector<Matrix> coeffs;
            for (std::size_t t = 0; t < gens; ++t) coeffs.push_back(b1 * re[t] + b2 * im[t]);
            const AmplifiedElement combo(coeffs, family.generators);
            if (!combo.is_selfadjoint(1e-10)) continue;
            accumulate_xi(combo, p_max, rng, combo_acc);
            ++combos;
        }

        // <c, c> = phi(c* c) = sum C_t* C_u phi(y_t y_u) >= 0
        const AmplifiedElement cx(c, family.generators);
        const BlockOperator realised = cx.realize();
        const Matrix gram = block_expectation_of_product({realised.adjoint(), realised});
        Matrix expected = Matrix::Zero(k, k);
        for (std::size_t t = 0; t < gens; ++t)
            for (std::size_t u = 0; u < gens; ++u)
                expected += c[t].adjoint() * c[u] * second(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(u));
        positivity_defect = std::max(positivity_defect, max_abs_diff(gram, expected));
        Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(gram), Eigen::EigenvaluesOnly);
        min_eigen = std::min(min_eigen, eig.eigenvalues().minCoeff());
    }
    if (config.trials == 0) {
        CheckRecord rec;
        rec.name = "selfadjoint combinations";
        rec.inputs = inputs;
        rec.status = Status::Inconclusive;
        rec.note = "no trials, no combination tested";
        report.add(rec);
        return report;
    }
    emit_order_checks(report, "real part ", real_acc, inputs, config.tolerance);
    emit_order_checks(report, "imaginary part ", imag_acc, inputs, config.tolerance);
    if (combos == 0) {
        CheckRecord rec;
        rec.name = "selfadjoint combinations";
        rec.inputs = inputs;
        rec.status = Status::Inconclusive;
        rec.note = "no selfadjoint combination found within the sample budget";
        report.add(rec);
    } else {
        emit_order_checks(report, "combination ", combo_acc, inputs, config.tolerance);
    }
    report.add(bound_check("inner product formula", inputs, positivity_defect, config.tolerance));
    report.add(bound_check("inner product positivity", inputs, std::max(0.0, -min_eigen), config.tolerance));
    std::ostringstream os;
    os << combos << " selfadjoint combinations tested, " << commuting << " with a non-scalar commuting coefficient";
    report.observations.push_back(os.str());
    return report;
}

Report verify_circular_star_moments(int max_length, double variance, double tolerance) {
    if (max_length < 1) throw InvalidArgument("verify_circular_star_moments: max_length must be positive");
    if (variance < 0.0) throw InvalidArgument("verify_circular_star_moments: negative variance");
    Report report;
    report.suite = "circular-star-moments";
    const auto xs = semicircular_family(Eigen::MatrixXd::Identity(2, 2), max_length);
    const double scale = std::sqrt(variance);
    const FockOperator c = Complex(scale) * xs[0] + Complex(0.0, scale) * xs[1];
    const FockOperator c_star = c.adjoint();
    const CovarianceSpec parts({"s1", "s2"}, variance * Eigen::MatrixXd::Identity(2, 2));
    double defect = 0.0;
    std::size_t words = 0;
    for (int len = 1; len <= max_length; ++len)
        for (unsigned pattern = 0; pattern < (1U << len); ++pattern) {
            StarWord w;
            std::vector<FockOperator> ops;
            for (int t = 0; t < len; ++t) {
                const bool star = (pattern >> t) & 1U;
                w.push_back({0, star});
                ops.push_back(star ? c_star : c);
            }
            defect = std::max(defect, std::abs(vacuum_expectation(ops) - circular_star_moment(w, parts)));
            ++words;
        }
    std::ostringstream os;
    os << "circular-star-moments words=" << words << " max_length=" << max_length << " variance=" << variance;
    auto rec = bound_check("fock vs star-word expansion", os.str(), defect, tolerance);
    rec.note = std::to_string(words) + " star words";
    report.add(rec);
    return report;
}

}  // namespace opfree
