#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sextic/exact/factor.hpp"
#include "sextic/exact/polynomial.hpp"

namespace sextic::exact {

struct RationalRootLimits {
    FactorLimits factoring;
    /// Divisor count cap for each of the leading and constant coefficients.
    std::size_t max_divisors = 2'000'000;
    /// Cap on (numerator, denominator) candidate pairs actually examined.
    std::size_t max_candidates = 20'000'000;
};

/// Every rational root of p, ascending, without multiplicity.
///
/// Rational root theorem on the primitive integer form: candidates p/q with
/// p | constant and q | leading, pruned by the Cauchy bound and the
/// divisibility of P(1) and P(-1), each verified exactly. A zero constant
/// term contributes the root 0 and the search continues on p/x.
/// Throws FactoringExhausted rather than returning a partial answer.
std::vector<BigRational> rational_roots(const RatPoly& p, const RationalRootLimits& limits = {});

/// Nonnegative square root when q is the square of a rational.
std::optional<BigRational> is_rational_square(const BigRational& q);

/// Res(p, q) = lead(p)^deg(q) * prod q(alpha) over the roots alpha of p,
/// computed with the fraction-free subresultant PRS on the primitive parts.
BigRational resultant(const RatPoly& p, const RatPoly& q);
BigInt resultant(const IntPoly& p, const IntPoly& q);

}  // namespace sextic::exact
