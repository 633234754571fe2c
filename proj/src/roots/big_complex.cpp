#include "sextic/roots/big_complex.hpp"

namespace sextic::roots {

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& t) { return {r * cos(t), r * sin(t)}; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }

BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const BigFloat denom = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

std::string BigComplex::to_string(int digits) const {
    std::string imag = im.to_string(digits);
    if (imag.front() != '-') imag.insert(imag.begin(), '+');
    return re.to_string(digits) + imag + "i";
}

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex pow(const BigComplex& z, unsigned long n) {
    BigComplex result(BigFloat(1L, z.precision()), BigFloat(z.precision()));
    BigComplex base = z;
    while (n > 0) {
        if (n & 1UL) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

BigComplex principal_root(const BigComplex& z, unsigned long n) {
    const mpfr_prec_t prec = z.precision();
    if (z.re.is_zero() && z.im.is_zero()) return BigComplex(prec);
    const BigFloat radius = rootn(abs(z), n);
    const BigFloat angle = atan2(z.im, z.re) / BigFloat(static_cast<long>(n), prec);
    return BigComplex::polar(radius, angle);
}

std::vector<BigComplex> expand_from_roots(std::span<const BigComplex> roots) {
    const mpfr_prec_t prec = roots.empty() ? 64 : roots.front().precision();
    std::vector<BigComplex> coeffs{BigComplex(BigFloat(1L, prec), BigFloat(prec))};
    for (const BigComplex& r : roots) {
        std::vector<BigComplex> next(coeffs.size() + 1, BigComplex(prec));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= coeffs[k] * r;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace sextic::roots
