#include "sextic/quintic/quintic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sextic/classify/classify.hpp"
#include "sextic/errors.hpp"
#include "sextic/exact/algorithms.hpp"
#include "sextic/util/parallel.hpp"

namespace sextic::quintic {

using exact::BigInt;

RatPoly BringJerrard::polynomial() const {
    return RatPoly::from_high({1, 0, 0, 0, a, b});
}

void QuinticParams::validate() const {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    if (c.sign() <= 0) throw std::invalid_argument("c must be positive");
    if (e.is_zero()) throw std::invalid_argument("e must be nonzero");
}

std::string QuinticParams::to_string() const {
    return "(" + std::to_string(epsilon) + ", " + c.to_string() + ", " + e.to_string() + ")";
}

BringJerrard ab_from_params(const QuinticParams& params) {
    params.validate();
    const BigRational eps(params.epsilon);
    const BigRational D = params.c * params.c + 1;
    const BigRational a = BigRational(5) * pow(params.e, 4) * (BigRational(3) - BigRational(4) * eps * params.c) / D;
    const BigRational b = BigRational(-4) * pow(params.e, 5) * (BigRational(11) * eps + BigRational(2) * params.c) / D;
    return {a, b};
}

namespace {

struct HeightPoint {
    BigRational e;
    BigRational e4;
    BigRational e5;
};

std::vector<HeightPoint> height_points(int height_bound) {
    std::vector<HeightPoint> points;
    for (int m = 1; m <= height_bound; ++m) {
        for (int n = -height_bound; n <= height_bound; ++n) {
            if (n == 0 || std::gcd(n, m) != 1) continue;
            const BigRational e{BigInt(n), BigInt(m)};
            points.push_back({e, pow(e, 4), pow(e, 5)});
        }
    }
    return points;
}

std::optional<QuinticParams> scan(const BigRational& a, const BigRational& b, const std::vector<HeightPoint>& points) {
    if (a.is_zero()) throw std::invalid_argument("params_from_ab needs a != 0");
    for (const auto& point : points) {
        for (int eps : {1, -1}) {
            // a c^2 + 20 eps e^4 c + (a - 15 e^4) = 0
            const BigRational B = BigRational(20 * eps) * point.e4;
            const BigRational C = a - BigRational(15) * point.e4;
            const auto root = exact::is_rational_square(B * B - BigRational(4) * a * C);
            if (!root) continue;
            std::vector<BigRational> cs{(-B - *root) / (BigRational(2) * a), (-B + *root) / (BigRational(2) * a)};
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            for (const auto& c : cs) {
                if (c.sign() <= 0) continue;
                const BigRational D = c * c + 1;
                if (BigRational(-4) * point.e5 * (BigRational(11 * eps) + BigRational(2) * c) / D == b) {
                    return QuinticParams{eps, c, point.e};
                }
            }
        }
    }
    return std::nullopt;
}

struct Candidate {
    std::array<BigComplex, 5> roots;
    BigFloat residual;
    /// max_j |x_j|^5 + |a||x_j| + |b|, the size of the terms that cancel.
    BigFloat scale;
};

Candidate evaluate(const std::array<BigComplex, 4>& u, const std::array<BigComplex, 5>& omega_powers,
                   const BigComplex& e, const BigRational& a, const BigRational& b, mpfr_prec_t prec) {
    Candidate out;
    out.residual = BigFloat(prec);
    const BigComplex ca(a, prec);
    const BigComplex cb(b, prec);
    out.scale = BigFloat(1L, prec);
    for (int j = 0; j < 5; ++j) {
        BigComplex sum(prec);
        for (int k = 1; k <= 4; ++k) sum += omega_powers[static_cast<std::size_t>((j * k) % 5)] * u[k - 1];
        const BigComplex x = e * sum;
        const BigComplex value = pow(x, 5) + ca * x + cb;
        out.residual = max(out.residual, abs(value));
        const BigFloat r = abs(x);
        out.scale = max(out.scale, pow(r, 5) + abs(ca.re) * r + abs(cb.re));
        out.roots[static_cast<std::size_t>(j)] = x;
    }
    return out;
}

}  // namespace

std::optional<QuinticParams> params_from_ab(const BigRational& a, const BigRational& b, int height_bound) {
    return scan(a, b, height_points(height_bound));
}

QuinticRadicals radical_roots(const QuinticParams& params, unsigned precision_bits) {
    const auto [a, b] = ab_from_params(params);
    const BigRational D = params.c * params.c + 1;
    for (unsigned bits = precision_bits;; bits *= 2) {
        const auto prec = static_cast<mpfr_prec_t>(bits);
        const BigFloat d(D, prec);
        const BigFloat eps(static_cast<long>(params.epsilon), prec);
        const BigFloat root_d = sqrt(d);
        const BigFloat minus = sqrt(d - eps * root_d);
        const BigFloat plus = sqrt(d + eps * root_d);
        const BigFloat zero(prec);
        QuinticRadicals out;
        out.D = D;
        out.precision_bits = bits;
        out.v = {BigComplex(root_d + minus, zero), BigComplex(-root_d - plus, zero),
                 BigComplex(-root_d + plus, zero), BigComplex(root_d - minus, zero)};
        const auto& v = out.v;
        const BigFloat d2 = d * d;
        const std::array<BigComplex, 4> radicands{v[0] * v[0] * v[2] * (BigFloat(1L, prec) / d2),
                                                  v[2] * v[2] * v[3] * (BigFloat(1L, prec) / d2),
                                                  v[1] * v[1] * v[0] * (BigFloat(1L, prec) / d2),
                                                  v[3] * v[3] * v[1] * (BigFloat(1L, prec) / d2)};
        std::array<BigComplex, 4> principal;
        for (std::size_t k = 0; k < 4; ++k) principal[k] = principal_root(radicands[k], 5);
        out.omega = BigComplex::polar(BigFloat(1L, prec), BigFloat::pi(prec) * BigFloat(2L, prec) / BigFloat(5L, prec));
        std::array<BigComplex, 5> omega_powers;
        omega_powers[0] = BigComplex(BigFloat(1L, prec), zero);
        for (std::size_t k = 1; k < 5; ++k) omega_powers[k] = omega_powers[k - 1] * out.omega;
        const BigComplex e(params.e, prec);

        const BigFloat tolerance = BigFloat::exp2(-static_cast<long>(prec / 2), prec);
        std::optional<BigFloat> best_relative;
        for (int code = 0; code < 625; ++code) {
            std::array<int, 4> branch{code / 125, code / 25 % 5, code / 5 % 5, code % 5};
            std::array<BigComplex, 4> u;
            for (std::size_t k = 0; k < 4; ++k) u[k] = principal[k] * omega_powers[static_cast<std::size_t>(branch[k])];
            auto candidate = evaluate(u, omega_powers, e, a, b, prec);
            const BigFloat relative = candidate.residual / candidate.scale;
            if (relative <= tolerance) {
                out.u = u;
                out.branch = branch;
                out.roots = std::move(candidate.roots);
                out.residual = std::move(candidate.residual);
                return out;
            }
            if (!best_relative || relative < *best_relative) best_relative = relative;
        }
        // A correct assignment only misses the tolerance through rounding; a
        // relative residual this large means no branch fits at all.
        if (*best_relative > BigFloat::exp2(-20, prec)) {
            throw NoConsistentBranch("no fifth-root branch satisfies the quintic for params " + params.to_string());
        }
        if (bits >= roots::kMaxPrecisionBits) break;
    }
    throw PrecisionExhausted("radical roots not accurate enough for params " + params.to_string());
}

std::vector<BringJerrard> search_quintics(int box, int height_bound, unsigned jobs) {
    if (box < 1) throw std::invalid_argument("search_quintics needs box >= 1");
    const auto points = height_points(height_bound);
    const std::size_t width = static_cast<std::size_t>(2 * box + 1);
    std::vector<std::vector<BringJerrard>> rows(width);
    util::parallel_for(width, jobs, [&](std::size_t i) {
        const int a = static_cast<int>(i) - box;
        if (a == 0) return;
        for (int b = -box; b <= box; ++b) {
            const BringJerrard q{a, b};
            if (!scan(q.a, q.b, points)) continue;
            if (classify::is_irreducible(q.polynomial())) rows[i].push_back(q);
        }
    });
    std::vector<BringJerrard> hits;
    for (auto& row : rows) hits.insert(hits.end(), row.begin(), row.end());
    return hits;
}

}  // namespace sextic::quintic
