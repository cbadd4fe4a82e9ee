#pragma once

// Brute-force reference computations used to cross-check the fast paths.

#include <cstdint>

#include "modlie/liealg.hpp"

namespace modlie::oracle {

/// C(n, k) mod p from n! / (k! (n-k)!) with the p-parts split off; needs n >= 0.
std::uint32_t factorial_binomial(std::int64_t n, std::int64_t k, std::uint32_t p);

/// Bracket expanded from divided-power partial derivatives,
/// {f, g} = (d_y f)(d_x g) - (d_x f)(d_y g), with the y-only correction of the
/// Albert-Zassenhaus family and the constant projection of the graded
/// Hamiltonian family.
dp::AlgebraElement poisson_bracket(lie::Family family, const dp::AlgebraElement& u, const dp::AlgebraElement& v);

}  // namespace modlie::oracle
