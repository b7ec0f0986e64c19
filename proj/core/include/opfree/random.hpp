#pragma once

#include <cstdint>
#include <random>

#include "opfree/matrix.hpp"

namespace opfree {

/// Independent, reproducible stream for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial);

/// Matrix with i.i.d. standard complex Gaussian entries (real and imaginary parts N(0, 1/2)).
Matrix random_complex(std::size_t dim, std::mt19937_64& rng);

/// (M + M*) / 2 for M drawn by random_complex.
Matrix random_selfadjoint(std::size_t dim, std::mt19937_64& rng);

}  // namespace opfree
