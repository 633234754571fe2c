#include "sextic/exact/algorithms.hpp"

#include <algorithm>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic::exact {

namespace {

BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Dense integer polynomial helpers for the subresultant loop; low degree first.
using Coeffs = std::vector<BigInt>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

BigInt content(const Coeffs& a) {
    BigInt g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

void divide_exact(Coeffs& a, const BigInt& d) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// lead(b)^(deg a - deg b + 1) * a mod b.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
    const int db = deg(b);
    const BigInt& lb = b.back();
    int steps = 0;
    const int delta = deg(a) - db;
    while (!a.empty() && deg(a) >= db) {
        const BigInt la = a.back();
        const int shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
        trim(a);
        ++steps;
    }
    if (steps < delta + 1) {
        const BigInt f = int_pow(lb, static_cast<unsigned long>(delta + 1 - steps));
        for (auto& c : a) c *= f;
    }
    return a;
}

}  // namespace

std::vector<BigRational> rational_roots(const RatPoly& p, const RationalRootLimits& limits) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    std::vector<BigRational> roots;
    auto [prim, scale] = IntPoly::primitive_of(p);
    std::vector<BigInt> cs(prim.coefficients().begin(), prim.coefficients().end());
    if (cs.front() == 0) {
        roots.emplace_back(0);
        while (cs.front() == 0) cs.erase(cs.begin());
    }
    const IntPoly poly{cs};
    const int n = poly.degree();
    if (n <= 0) return roots;

    const BigInt lead = abs(poly.leading());
    const BigInt constant = abs(poly[0]);

    // Cauchy bound: every root has |z| < 1 + max |a_i / a_n|.
    BigRational bound = 0;
    for (int k = 0; k < n; ++k) {
        const BigRational ratio(abs(poly[static_cast<std::size_t>(k)]), lead);
        bound = std::max(bound, ratio);
    }
    bound += 1;

    const BigInt at_one = poly_eval(poly, BigInt(1));
    const BigInt at_minus_one = poly_eval(poly, BigInt(-1));

    const auto num_divs = divisors(constant, limits.max_divisors, limits.factoring);
    const auto den_divs = divisors(lead, limits.max_divisors, limits.factoring);

    std::size_t examined = 0;
    for (const BigInt& q : den_divs) {
        for (const BigInt& a : num_divs) {
            if (BigRational(a, q) > bound) break;
            if (gcd(a, q) != 1) continue;
            for (const BigInt& num : {a, BigInt(-a)}) {
                if (++examined > limits.max_candidates) {
                    throw FactoringExhausted("rational root candidate cap exceeded");
                }
                const BigInt qm = q - num;
                const BigInt qp = q + num;
                if (at_one != 0 && (qm == 0 || !mpz_divisible_p(at_one.get_mpz_t(), qm.get_mpz_t()))) continue;
                if (at_minus_one != 0 && (qp == 0 || !mpz_divisible_p(at_minus_one.get_mpz_t(), qp.get_mpz_t())))
                    continue;
                // Homogenised evaluation sum a_k num^k q^(n-k) stays in Z.
                BigInt acc = 0;
                BigInt qpow = 1;
                for (int k = n; k >= 0; --k) {
                    acc = acc * num + poly[static_cast<std::size_t>(k)] * qpow;
                    qpow *= q;
                }
                if (acc == 0) roots.emplace_back(num, q);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<BigRational> is_rational_square(const BigRational& q) {
    if (q.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.num().get_mpz_t()) || !mpz_perfect_square_p(q.den().get_mpz_t())) {
        return std::nullopt;
    }
    BigInt n;
    BigInt d;
    mpz_sqrt(n.get_mpz_t(), q.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.den().get_mpz_t());
    return BigRational(n, d);
}

BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    Coeffs a(p.coefficients().begin(), p.coefficients().end());
    Coeffs b(q.coefficients().begin(), q.coefficients().end());
    const BigInt ca = content(a);
    const BigInt cb = content(b);
    divide_exact(a, ca);
    divide_exact(b, cb);
    const BigInt t = int_pow(ca, static_cast<unsigned long>(deg(b))) * int_pow(cb, static_cast<unsigned long>(deg(a)));
    int s = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    }
    BigInt g = 1;
    BigInt h = 1;
    while (deg(b) > 0) {
        const int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
        Coeffs r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty()) return 0;
        divide_exact(r, g * int_pow(h, static_cast<unsigned long>(delta)));
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            BigInt num = int_pow(g, static_cast<unsigned long>(delta));
            const BigInt den = int_pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = num;
        }
    }
    // b is a nonzero constant here.
    const int da = deg(a);
    if (da == 0) return s * t;
    BigInt last = int_pow(b.back(), static_cast<unsigned long>(da));
    const BigInt den = int_pow(h, static_cast<unsigned long>(da - 1));
    mpz_divexact(last.get_mpz_t(), last.get_mpz_t(), den.get_mpz_t());
    return s * t * last;
}

BigRational resultant(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    const auto [pi, ps] = IntPoly::primitive_of(p);
    const auto [qi, qs] = IntPoly::primitive_of(q);
    // Res(a*P, b*Q) = a^deg Q * b^deg P * Res(P, Q).
    return pow(ps, static_cast<unsigned>(q.degree())) * pow(qs, static_cast<unsigned>(p.degree())) *
           BigRational(resultant(pi, qi));
}

}  // namespace sextic::exact
