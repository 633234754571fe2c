#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sextic/exact/polynomial.hpp"
#include "sextic/roots/big_complex.hpp"
#include "sextic/roots/root_finder.hpp"

namespace sextic::quintic {

using exact::BigRational;
using exact::RatPoly;
using roots::BigComplex;
using roots::BigFloat;

/// x^5 + a x + b.
struct BringJerrard {
    BigRational a;
    BigRational b;

    RatPoly polynomial() const;
    friend bool operator==(const BringJerrard&, const BringJerrard&) = default;
};

/// epsilon = +-1, c > 0, e != 0.
struct QuinticParams {
    int epsilon = 1;
    BigRational c;
    BigRational e;

    /// Throws std::invalid_argument if a field is out of range.
    void validate() const;
    std::string to_string() const;
    friend bool operator==(const QuinticParams&, const QuinticParams&) = default;
};

/// a = 5e^4(3 - 4 eps c)/(c^2 + 1), b = -4e^5(11 eps + 2c)/(c^2 + 1).
BringJerrard ab_from_params(const QuinticParams& params);

inline constexpr int kDefaultHeightBound = 24;

/// Scans e = n/m in lowest terms with m = 1..height_bound (outer) and
/// n = -height_bound..height_bound, then epsilon = +1, -1, then the positive
/// rational solutions c of the quadratic from the a-equation in ascending
/// order. Returns the first (epsilon, c, e) that also reproduces b exactly.
/// Empty means nothing within the bound. Requires a != 0.
std::optional<QuinticParams> params_from_ab(const BigRational& a, const BigRational& b,
                                            int height_bound = kDefaultHeightBound);

struct QuinticRadicals {
    BigRational D;
    std::array<BigComplex, 4> v;
    std::array<BigComplex, 4> u;
    BigComplex omega;
    std::array<BigComplex, 5> roots;
    /// u_k is the principal fifth root times omega^branch[k]; all zero when
    /// the principal roots already give consistent roots.
    std::array<int, 4> branch{};
    /// max_j |x_j^5 + a x_j + b|.
    BigFloat residual;
    unsigned precision_bits = 0;

    bool principal() const { return branch == std::array<int, 4>{}; }
};

/// The radical roots x_j = e sum_k omega^(jk) u_k. Fifth-root branches are
/// tried in lexicographic order starting from the principal ones; the first
/// assignment whose five roots satisfy the quintic wins. Doubles the
/// precision while the best residual is merely inaccurate.
/// Throws NoConsistentBranch or PrecisionExhausted.
QuinticRadicals radical_roots(const QuinticParams& params, unsigned precision_bits = roots::kDefaultPrecisionBits);

/// Integer pairs with |a|, |b| <= box and a != 0, in order of a then b, for
/// which x^5 + a x + b is irreducible and params_from_ab finds parameters.
std::vector<BringJerrard> search_quintics(int box, int height_bound = kDefaultHeightBound, unsigned jobs = 1);

}  // namespace sextic::quintic
