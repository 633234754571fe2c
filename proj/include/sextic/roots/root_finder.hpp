#pragma once

#include <span>
#include <vector>

#include "sextic/exact/polynomial.hpp"
#include "sextic/roots/big_complex.hpp"

namespace sextic::roots {

/// Approximations to every complex root of `source`, with one error radius
/// that bounds the distance from each approximation to a true root.
struct ComplexRootSet {
    std::vector<BigComplex> roots;
    BigFloat error_radius;
    exact::RatPoly source;
    unsigned precision_bits = 0;
};

/// Bit budget of the precision ladder used throughout the library.
inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMaxPrecisionBits = 4096;

/// All roots at once by Aberth-Ehrlich iteration, started from perturbed
/// points on the circle of radius 1 + max |c_i / c_lead| and polished by
/// Newton steps. The radius is n * max |p(z)| / |p'(z)|, which always
/// encloses a true root; it is guaranteed <= 2^(-precision_bits / 2).
/// Roots come back sorted by real part, then imaginary part.
///
/// Throws NonConvergence when the iteration budget runs out and
/// RepeatedRootSuspected when roots cluster and the certificate fails.
ComplexRootSet find_roots(const exact::RatPoly& p, unsigned precision_bits);

/// Nearest-integer polynomial (low degree first). Every imaginary part and
/// every distance to the nearest integer must be within `tolerance`;
/// otherwise NotNearInteger reports the worst offender.
exact::IntPoly round_to_int_poly(std::span<const BigComplex> coeffs, const BigFloat& tolerance);

/// Largest error, over all coefficients, of expand_from_roots(values) when
/// each value is within errors[i] of the exact one. Includes rounding.
BigFloat expansion_error_bound(std::span<const BigComplex> values, std::span<const BigFloat> errors);

}  // namespace sextic::roots
