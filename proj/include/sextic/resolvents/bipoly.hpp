#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "sextic/exact/big_rational.hpp"

namespace sextic::resolvents {

using exact::BigInt;
using exact::BigRational;

/// Integer polynomial in d and e, keyed by (d-power, e-power).
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(long constant);  // NOLINT(google-explicit-constructor)
    static BiPoly monomial(const BigInt& c, int d_power, int e_power);

    /// Integer expressions in d and e with + - * ^ and parentheses;
    /// juxtaposition multiplies, so "-(42e+3)e^3" and "e^{10}" both parse.
    static BiPoly parse(std::string_view text);

    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(int d_power, int e_power) const;
    BigRational eval(const BigRational& d, const BigRational& e) const;

    /// e.g. "-42*e^4 + 3*d^2*e^3 - 1"; highest e-power first, then d-power.
    std::string to_string() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) { return BiPoly() - a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void add_term(const Key& k, const BigInt& c);
    std::map<Key, BigInt> terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

}  // namespace sextic::resolvents
