#include "sextic/exact/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic::exact {

namespace {

bool probably_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
BigInt rho_brent(const BigInt& n, unsigned long c, std::uint64_t budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    BigInt y = 2;
    BigInt x;
    BigInt ys;
    BigInt q = 1;
    BigInt g = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    std::uint64_t spent = 0;
    auto step = [&](BigInt& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                step(y);
                BigInt diff = x - y;
                q = q * abs(diff);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            g = gcd(q, n);
            k += lim;
            spent += lim;
            if (spent > budget) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the saved position.
        do {
            step(ys);
            g = gcd(BigInt(abs(x - ys)), n);
        } while (g == 1);
    }
    return g == n ? BigInt(0) : g;
}

void split(const BigInt& n, const FactorLimits& limits, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    BigInt root;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned k = 2; k < 64; ++k) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<BigInt, unsigned> sub;
                split(root, limits, sub);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    for (int attempt = 0; attempt < limits.rho_attempts; ++attempt) {
        const BigInt f = rho_brent(n, 1 + 2 * static_cast<unsigned long>(attempt), limits.rho_iterations);
        if (f != 0 && f != 1 && f != n) {
            split(f, limits, out);
            split(BigInt(n / f), limits, out);
            return;
        }
    }
    throw FactoringExhausted("could not split composite " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) +
                             "-digit cofactor");
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n, const FactorLimits& limits) {
    if (n == 0) throw std::domain_error("factor_integer: zero");
    BigInt rest = abs(n);
    std::map<BigInt, unsigned> found;
    for (unsigned p : {2u, 3u, 5u}) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[BigInt(p)];
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    // Wheel over residues coprime to 30.
    static constexpr unsigned kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    for (std::size_t w = 0; p <= limits.trial_bound && rest > 1; p += kWheel[w++ % 8]) {
        if (BigInt(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[BigInt(static_cast<unsigned long>(p))];
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    split(rest, limits, found);
    return {found.begin(), found.end()};
}

std::vector<BigInt> divisors(const BigInt& n, std::size_t max_count, const FactorLimits& limits) {
    const auto factors = factor_integer(n, limits);
    std::size_t count = 1;
    for (const auto& [p, e] : factors) {
        count *= e + 1;
        if (count > max_count) {
            throw FactoringExhausted("divisor count exceeds cap of " + std::to_string(max_count));
        }
    }
    std::vector<BigInt> out{1};
    out.reserve(count);
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        BigInt power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sextic::exact
