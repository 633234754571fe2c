#include "sextic/roots/big_float.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace sextic::roots {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_q(value_, value.gmp().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::exp2(long exponent, mpfr_prec_t precision) {
    BigFloat r(1L, precision);
    mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

long BigFloat::exponent() const {
    if (mpfr_zero_p(value_)) return -(1L << 40);
    return mpfr_get_exp(value_);
}

BigInt BigFloat::round_to_integer() const {
    BigInt r;
    mpfr_get_z(r.get_mpz_t(), value_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, value_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
    mpfr_add(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
    mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
    mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
    mpfr_div(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(wider(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(wider(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(wider(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigFloat rootn(const BigFloat& x, unsigned long n) {
    BigFloat r(x.precision());
    mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, unsigned long n) {
    BigFloat r(x.precision());
    mpfr_pow_ui(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace sextic::roots
