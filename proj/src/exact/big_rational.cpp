#include "sextic/exact/big_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic::exact {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

BigInt parse_big_int(std::string_view text) {
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("empty integer literal");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("invalid integer literal '" + std::string(text) + "'");
        }
    }
    BigInt v(std::string(digits), 10);
    if (text.front() == '-') v = -v;
    return v;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : value_(q) {
    if (value_.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_big_int(text));
    const BigInt num = parse_big_int(text.substr(0, slash));
    const std::string_view den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
    }
    const BigInt den = parse_big_int(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return BigRational(num, den);
}

BigRational BigRational::abs() const { return BigRational(::abs(value_)); }

BigRational BigRational::inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    return BigRational(den(), num());
}

std::string BigRational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

BigRational pow(const BigRational& base, unsigned exponent) {
    BigInt n;
    BigInt d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
    return BigRational(n, d);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

}  // namespace sextic::exact

std::size_t std::hash<sextic::exact::BigRational>::operator()(
    const sextic::exact::BigRational& q) const noexcept {
    const std::size_t h1 = mpz_get_ui(q.num().get_mpz_t()) ^ (q.sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    const std::size_t h2 = mpz_get_ui(q.den().get_mpz_t());
    return h1 * 1000003u ^ h2;
}
