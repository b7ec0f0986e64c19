#include "opfree/standard_poly.hpp"

#include <sstream>
#include <string>

#include "opfree/errors.hpp"
#include "opfree/random.hpp"

namespace opfree {
namespace {

// Alternation makes s_d vanish on repeated arguments and only change sign under
// reordering, so distinct matrix units in increasing order cover every candidate.
bool search_units(int n, int degree, int next_unit, std::vector<Matrix>& chosen,
                  std::optional<StandardPolyInstance>& found) {
    if (static_cast<int>(chosen.size()) == degree) {
        if (max_abs(standard_polynomial(chosen)) > 0.5) {
            found = StandardPolyInstance{chosen};
            return true;
        }
        return false;
    }
    const int units = n * n;
    for (int u = next_unit; u <= units - (degree - static_cast<int>(chosen.size())); ++u) {
        chosen.push_back(matrix_unit(static_cast<std::size_t>(n), static_cast<std::size_t>(u / n),
                                     static_cast<std::size_t>(u % n)));
        if (search_units(n, degree, u + 1, chosen, found)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

Matrix standard_polynomial(const std::vector<Matrix>& args) {
    const int d = static_cast<int>(args.size());
    if (d < 1 || d > kMaxStandardDegree)
        throw SizeLimitError("standard_polynomial: degree " + std::to_string(d) + " outside [1, " +
                             std::to_string(kMaxStandardDegree) + "]");
    const Eigen::Index k = args.front().rows();
    for (const auto& a : args)
        if (a.rows() != k || a.cols() != k) throw DimensionError("standard_polynomial: arguments differ in dimension");

    // value[mask] = s_{|mask|} of the arguments in mask, kept in increasing index order.
    const std::size_t full = (std::size_t{1} << d) - 1;
    std::vector<Matrix> value(full + 1);
    value[0] = Matrix::Identity(k, k);
    for (std::size_t mask = 1; mask <= full; ++mask) {
        Matrix acc = Matrix::Zero(k, k);
        int position = 0;
        for (int i = 0; i < d; ++i) {
            if (!((mask >> i) & 1U)) continue;
            const Matrix term = args[static_cast<std::size_t>(i)] * value[mask & ~(std::size_t{1} << i)];
            if (position % 2 == 0)
                acc += term;
            else
                acc -= term;
            ++position;
        }
        value[mask] = std::move(acc);
    }
    return value[full];
}

Report verify_al_vanishing(int n, std::size_t trials, std::uint64_t seed, double tolerance) {
    if (n < 1 || 2 * n > kMaxStandardDegree) throw SizeLimitError("verify_al_vanishing: matrix size out of range");
    Report report;
    report.suite = "amitsur-levitzki";
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_stream(seed, t);
        std::vector<Matrix> args;
        for (int i = 0; i < 2 * n; ++i) args.push_back(random_complex(static_cast<std::size_t>(n), rng));
        worst = std::max(worst, max_abs(standard_polynomial(args)));
    }
    std::ostringstream os;
    os << "s_" << 2 * n << " on M_" << n << " trials=" << trials << " seed=" << seed;
    report.add(bound_check("s_" + std::to_string(2 * n) + " vanishes on M_" + std::to_string(n), os.str(), worst,
                           tolerance));
    return report;
}

std::optional<StandardPolyInstance> find_nonvanishing_witness(int n) {
    if (n < 1 || 2 * n - 1 > kMaxStandardDegree) throw SizeLimitError("find_nonvanishing_witness: matrix size out of range");
    std::optional<StandardPolyInstance> found;
    std::vector<Matrix> chosen;
    search_units(n, 2 * n - 1, 0, chosen, found);
    return found;
}

}  // namespace opfree
