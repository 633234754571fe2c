#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sextic/exact/big_rational.hpp"

namespace sextic::exact {

/// Univariate polynomial over Q. Coefficients are stored low degree first and
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRational> low_to_high);

    /// Coefficients given highest degree first, the way polynomials are written.
    static RatPoly from_high(std::vector<BigRational> high_to_low);
    static RatPoly monomial(const BigRational& c, std::size_t k);
    static RatPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero past the degree.
    const BigRational& operator[](std::size_t k) const;
    const BigRational& leading() const;
    std::span<const BigRational> coefficients() const { return coeffs_; }
    std::vector<BigRational> high_to_low() const;

    RatPoly derivative() const;
    RatPoly monic() const;
    /// p(c*x).
    RatPoly scale_argument(const BigRational& c) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const BigRational& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const BigRational& c) { return a *= c; }
    friend RatPoly operator*(const BigRational& c, RatPoly a) { return a *= c; }
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Human-readable form, e.g. "x^6 + x^2 + 1/2*x + 5/36".
    std::string to_string() const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Integer polynomial, low degree first, trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> low_to_high);

    /// Splits p = scale * prim with prim primitive and lead(prim) > 0.
    static std::pair<IntPoly, BigRational> primitive_of(const RatPoly& p);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& operator[](std::size_t k) const;
    const BigInt& leading() const;
    std::span<const BigInt> coefficients() const { return coeffs_; }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    BigInt content() const;
    IntPoly primitive_part() const;

    RatPoly to_rational() const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Exact Horner evaluation.
BigRational poly_eval(const RatPoly& p, const BigRational& x);
BigInt poly_eval(const IntPoly& p, const BigInt& x);

/// Euclidean division over Q; q must be nonzero.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& p, const RatPoly& q);

/// p / q when q divides p exactly, otherwise empty. q must be nonzero.
std::optional<RatPoly> poly_divide_exact(const RatPoly& p, const RatPoly& q);

}  // namespace sextic::exact
