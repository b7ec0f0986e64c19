#include "opfree/mcx.hpp"

#include <cstring>
#include <sstream>
#include <string>
#include <unordered_map>

#include "opfree/errors.hpp"

namespace opfree {
namespace {

void check_square(const Matrix& m, std::size_t dim, const char* what) {
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
        std::ostringstream os;
        os << what << ": expected " << dim << "x" << dim << " matrix, got " << m.rows() << "x" << m.cols();
        throw DimensionError(os.str());
    }
}

void check_order(std::size_t n) {
    if (n < 1 || n > static_cast<std::size_t>(kMaxPartitionSize))
        throw SizeLimitError("word length " + std::to_string(n) + " outside the supported order range");
}

class PartitionEvaluator {
public:
    PartitionEvaluator(const NcPartition& pi, const OpWord& word, const CumulantFn& cumulant)
        : pi_(pi), word_(word), cumulant_(cumulant) {}

    Matrix run() const { return chain(pi_.roots()); }

private:
    // Adjacent components tile an interval; the coefficient between them sits left of the next one.
    Matrix chain(const std::vector<int>& components) const {
        Matrix acc = block_value(components.front());
        for (std::size_t c = 1; c < components.size(); ++c) {
            const auto start = static_cast<std::size_t>(pi_.blocks()[static_cast<std::size_t>(components[c])].front());
            acc = acc * word_.coeff_before(start) * block_value(components[c]);
        }
        return acc;
    }

    Matrix block_value(int block) const {
        const Block& elems = pi_.blocks()[static_cast<std::size_t>(block)];
        const auto& kids = pi_.children(block);
        std::vector<int> sub_elements;
        std::vector<Matrix> sub_coeffs;
        sub_elements.reserve(elems.size());
        sub_coeffs.reserve(elems.size());
        std::size_t next_child = 0;
        for (std::size_t t = 0; t < elems.size(); ++t) {
            const auto pos = static_cast<std::size_t>(elems[t]);
            sub_elements.push_back(word_.element(pos));
            if (t == 0) continue;
            const auto prev = static_cast<std::size_t>(elems[t - 1]);
            if (pos == prev + 1) {
                sub_coeffs.push_back(word_.coeff_before(pos));
                continue;
            }
            std::vector<int> gap;
            while (next_child < kids.size() &&
                   pi_.blocks()[static_cast<std::size_t>(kids[next_child])].front() < elems[t]) {
                gap.push_back(kids[next_child]);
                ++next_child;
            }
            sub_coeffs.push_back(word_.coeff_before(prev + 1) * chain(gap) * word_.coeff_before(pos));
        }
        OpWord sub(word_.dim(), std::move(sub_elements), std::move(sub_coeffs));
        Matrix value = cumulant_(sub);
        check_square(value, word_.dim(), "cumulant evaluator");
        return value;
    }

    const NcPartition& pi_;
    const OpWord& word_;
    const CumulantFn& cumulant_;
};

std::string memo_key(const OpWord& word) {
    std::string key;
    key.reserve(word.length() * sizeof(int) + word.coeffs().size() * word.dim() * word.dim() * sizeof(Complex));
    for (int e : word.elements()) key.append(reinterpret_cast<const char*>(&e), sizeof e);
    for (const auto& c : word.coeffs())
        key.append(reinterpret_cast<const char*>(c.data()), static_cast<std::size_t>(c.size()) * sizeof(Complex));
    return key;
}

class CumulantSolver {
public:
    explicit CumulantSolver(const MomentSource& source) : source_(source) {}

    Matrix cumulant(const OpWord& word) {
        auto key = memo_key(word);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int n = static_cast<int>(word.length());
        Matrix value = source_.evaluate(word);
        check_square(value, word.dim(), "moment source");
        const CumulantFn lower = [this](const OpWord& w) { return cumulant(w); };
        for (const auto& pi : nc_partitions(n)) {
            if (pi.blocks().size() == 1) continue;
            value -= PartitionEvaluator(pi, word, lower).run();
        }
        memo_.emplace(std::move(key), value);
        return value;
    }

private:
    const MomentSource& source_;
    std::unordered_map<std::string, Matrix> memo_;
};

}  // namespace

OpWord::OpWord(std::size_t dim, std::vector<int> elements, std::vector<Matrix> coeffs)
    : dim_(dim), elements_(std::move(elements)), coeffs_(std::move(coeffs)) {
    if (dim_ == 0) throw DimensionError("OpWord: ambient dimension must be positive");
    if (elements_.empty()) throw InvalidArgument("OpWord: empty word");
    if (coeffs_.size() + 1 != elements_.size())
        throw InvalidArgument("OpWord: a word of length n carries n-1 coefficients");
    for (const auto& c : coeffs_) check_square(c, dim_, "OpWord coefficient");
}

OpWord OpWord::plain(std::size_t dim, std::vector<int> elements) {
    const auto k = static_cast<Eigen::Index>(dim);
    std::vector<Matrix> coeffs(elements.empty() ? 0 : elements.size() - 1, Matrix::Identity(k, k));
    return OpWord(dim, std::move(elements), std::move(coeffs));
}

Matrix k_pi_evaluate(const NcPartition& pi, const OpWord& word, const CumulantFn& cumulant) {
    if (static_cast<std::size_t>(pi.size()) != word.length())
        throw InvalidArgument("k_pi_evaluate: partition size differs from word length");
    return PartitionEvaluator(pi, word, cumulant).run();
}

Matrix k_pi_evaluate(const SetPartition& pi, const OpWord& word, const CumulantFn& cumulant) {
    return k_pi_evaluate(NcPartition(pi), word, cumulant);
}

Matrix cumulants_to_moments(const OpWord& word, const CumulantFn& cumulant) {
    check_order(word.length());
    const auto k = static_cast<Eigen::Index>(word.dim());
    Matrix total = Matrix::Zero(k, k);
    for (const auto& pi : nc_partitions(static_cast<int>(word.length())))
        total += PartitionEvaluator(pi, word, cumulant).run();
    return total;
}

Matrix moments_to_cumulants(const OpWord& word, const MomentSource& source) {
    check_order(word.length());
    if (word.dim() != source.dim) throw DimensionError("moments_to_cumulants: word and moment source disagree on dim(B)");
    CumulantSolver solver(source);
    return solver.cumulant(word);
}

Matrix xi_functional(const std::vector<int>& indices, const std::vector<Matrix>& b_args,
                     const MomentSource& source) {
    return moments_to_cumulants(OpWord(source.dim, indices, b_args), source);
}

Matrix eta_functional(const std::vector<int>& indices, const std::vector<Matrix>& b_args,
                      const MomentSource& source) {
    check_order(indices.size());
    OpWord word(source.dim, indices, b_args);
    Matrix value = source.evaluate(word);
    check_square(value, source.dim, "moment source");
    return value;
}

}  // namespace opfree
