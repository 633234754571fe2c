#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "sextic/exact/big_rational.hpp"

namespace sextic::roots {

using exact::BigInt;
using exact::BigRational;

/// Binary floating-point number with an explicit precision in bits (MPFR).
///
/// Arithmetic results carry the larger precision of the two operands, so a
/// value never loses precision by being combined with a wider one.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = 64);
    BigFloat(long value, mpfr_prec_t precision);
    BigFloat(double value, mpfr_prec_t precision);
    BigFloat(const BigInt& value, mpfr_prec_t precision);
    BigFloat(const BigRational& value, mpfr_prec_t precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// 2^exponent.
    static BigFloat exp2(long exponent, mpfr_prec_t precision);
    static BigFloat pi(mpfr_prec_t precision);

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent() const;
    BigInt round_to_integer() const;
    /// Decimal scientific notation with the given number of significant digits.
    std::string to_string(int digits) const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// Real n-th root; for negative x and odd n returns the negative real root.
BigFloat rootn(const BigFloat& x, unsigned long n);
BigFloat pow(const BigFloat& x, unsigned long n);
BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace sextic::roots
