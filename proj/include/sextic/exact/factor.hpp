#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sextic/exact/big_rational.hpp"

namespace sextic::exact {

struct FactorLimits {
    /// Trial division bound before switching to Pollard-Brent rho.
    std::uint64_t trial_bound = 1'000'000;
    /// Iterations spent on one rho attempt (each attempt uses a fresh constant).
    std::uint64_t rho_iterations = 400'000;
    int rho_attempts = 8;
};

/// Prime factorisation of |n| as (prime, exponent) pairs in increasing prime
/// order. n must be nonzero. Throws FactoringExhausted when a composite
/// cofactor resists rho within the limits.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n,
                                                        const FactorLimits& limits = {});

/// All positive divisors of |n|, ascending. Throws FactoringExhausted when the
/// divisor count would exceed max_count.
std::vector<BigInt> divisors(const BigInt& n, std::size_t max_count,
                             const FactorLimits& limits = {});

}  // namespace sextic::exact
