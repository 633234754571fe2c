#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace sextic::exact {

using BigInt = mpz_class;

/// Parses an optionally signed decimal integer; throws ParseError.
BigInt parse_big_int(std::string_view text);

/// Exact rational number in lowest terms with a positive denominator.
///
/// A thin value wrapper over mpq_class that keeps the canonical form as a
/// class invariant, so equal values always compare and hash equal.
class BigRational {
public:
    BigRational() = default;
    BigRational(int v) : value_(v) {}
    BigRational(long v) : value_(v) {}
    BigRational(const BigInt& v) : value_(v) {}
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& q);

    /// Accepts "n", "-n", "n/m" and "-n/m" (surrounding whitespace ignored).
    static BigRational parse(std::string_view text);

    const BigInt& num() const { return value_.get_num(); }
    const BigInt& den() const { return value_.get_den(); }
    const mpq_class& gmp() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    BigRational abs() const;
    BigRational inverse() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a);

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

BigRational pow(const BigRational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace sextic::exact

template <>
struct std::hash<sextic::exact::BigRational> {
    std::size_t operator()(const sextic::exact::BigRational& q) const noexcept;
};
