#include "sextic/exact/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sextic::exact {

namespace {

const BigRational kZeroQ{};
const BigInt kZeroZ{0};

}  // namespace

RatPoly::RatPoly(std::vector<BigRational> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

RatPoly RatPoly::from_high(std::vector<BigRational> high_to_low) {
    std::reverse(high_to_low.begin(), high_to_low.end());
    return RatPoly(std::move(high_to_low));
}

RatPoly RatPoly::monomial(const BigRational& c, std::size_t k) {
    std::vector<BigRational> v(k + 1);
    v[k] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigRational& RatPoly::operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZeroQ;
}

const BigRational& RatPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

std::vector<BigRational> RatPoly::high_to_low() const {
    return {coeffs_.rbegin(), coeffs_.rend()};
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * BigRational(static_cast<long>(k));
    return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    RatPoly r = *this;
    const BigRational inv = leading().inverse();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

RatPoly RatPoly::scale_argument(const BigRational& c) const {
    RatPoly r = *this;
    BigRational power = 1;
    for (auto& coeff : r.coeffs_) {
        coeff *= power;
        power *= c;
    }
    r.trim();
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const BigRational& c) {
    for (auto& coeff : coeffs_) coeff *= c;
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        const BigRational mag = c.abs();
        const bool unit = mag == BigRational(1);
        if (k == 0) {
            s += mag.to_string();
            continue;
        }
        if (!unit) s += mag.to_string() + "*";
        s += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return s;
}

IntPoly::IntPoly(std::vector<BigInt> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<IntPoly, BigRational> IntPoly::primitive_of(const RatPoly& p) {
    if (p.is_zero()) return {IntPoly{}, BigRational(0)};
    BigInt den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.den());
    std::vector<BigInt> ints;
    ints.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) ints.push_back(c.num() * (den_lcm / c.den()));
    IntPoly cleared(std::move(ints));
    BigInt content = cleared.content();
    if (cleared.leading() < 0) content = -content;
    for (auto& c : cleared.coeffs_) c /= content;
    return {cleared, BigRational(content, den_lcm)};
}

const BigInt& IntPoly::operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZeroZ;
}

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    const BigInt g = content();
    std::vector<BigInt> out = coeffs_;
    for (auto& c : out) c /= g;
    return IntPoly(std::move(out));
}

RatPoly IntPoly::to_rational() const {
    std::vector<BigRational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.emplace_back(c);
    return RatPoly(std::move(out));
}

BigRational poly_eval(const RatPoly& p, const BigRational& x) {
    BigRational acc;
    const auto cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

BigInt poly_eval(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    const auto cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.degree() < q.degree()) return {RatPoly{}, p};
    std::vector<BigRational> rem(p.coefficients().begin(), p.coefficients().end());
    const auto dq = static_cast<std::size_t>(q.degree());
    std::vector<BigRational> quot(rem.size() - dq);
    const BigRational inv_lead = q.leading().inverse();
    for (std::size_t k = rem.size(); k-- > dq;) {
        const BigRational factor = rem[k] * inv_lead;
        quot[k - dq] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= factor * q[j];
    }
    rem.resize(dq);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::optional<RatPoly> poly_divide_exact(const RatPoly& p, const RatPoly& q) {
    auto [quot, rem] = poly_divmod(p, q);
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

}  // namespace sextic::exact
