#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "sextic/roots/big_float.hpp"

namespace sextic::roots {

/// Complex number over BigFloat; both parts share one precision.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t precision = 64) : re(precision), im(precision) {}
    BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}
    BigComplex(const BigRational& real, mpfr_prec_t precision) : re(real, precision), im(precision) {}

    /// r * (cos t + i sin t).
    static BigComplex polar(const BigFloat& r, const BigFloat& t);

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }

    /// "re+imi" with the given number of significant digits per part.
    std::string to_string(int digits) const;
};

BigFloat abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex pow(const BigComplex& z, unsigned long n);
/// Principal n-th root: |z|^(1/n) * exp(i arg(z) / n) with arg in (-pi, pi].
BigComplex principal_root(const BigComplex& z, unsigned long n);

/// Coefficients (low degree first, monic) of prod (x - r_k).
std::vector<BigComplex> expand_from_roots(std::span<const BigComplex> roots);

}  // namespace sextic::roots
