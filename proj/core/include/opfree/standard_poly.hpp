#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "opfree/matrix.hpp"
#include "opfree/report.hpp"

namespace opfree {

inline constexpr int kMaxStandardDegree = 8;

/// Arguments of a standard polynomial s_d; the degree is the argument count.
struct StandardPolyInstance {
    std::vector<Matrix> args;
    std::size_t degree() const noexcept { return args.size(); }
};

/// s_d(X_1..X_d) = sum over S_d of sgn(sigma) X_sigma(1) ... X_sigma(d).
///
/// Evaluated by expansion along the first factor over subsets (2^d d terms rather than d! d).
Matrix standard_polynomial(const std::vector<Matrix>& args);

/// max |s_{2n}(X_1..X_{2n})| over random complex n x n tuples; pass iff <= tolerance.
Report verify_al_vanishing(int n, std::size_t trials, std::uint64_t seed, double tolerance = kDefaultTolerance);

/// First tuple of distinct n x n matrix units on which s_{2n-1} is nonzero, if any.
std::optional<StandardPolyInstance> find_nonvanishing_witness(int n);

}  // namespace opfree
