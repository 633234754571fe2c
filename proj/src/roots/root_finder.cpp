#include "sextic/roots/root_finder.hpp"

#include <algorithm>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic::roots {

namespace {

struct Evaluation {
    BigComplex value;
    BigComplex derivative;
};

Evaluation horner(const std::vector<BigFloat>& coeffs, const BigComplex& z) {
    const mpfr_prec_t prec = z.precision();
    BigComplex value(prec);
    BigComplex derivative(prec);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        derivative = derivative * z + value;
        value = value * z;
        value.re += *it;
    }
    return {value, derivative};
}

// Ordering key: real part snapped to a grid of 2^-(P/2), then imaginary part.
// Conjugate pairs share a snapped real part and so order by imaginary part.
bool canonical_less(const BigComplex& a, const BigComplex& b, long grid_exponent) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    const BigFloat scale = BigFloat::exp2(grid_exponent, prec);
    const BigInt ka = (a.re * scale).round_to_integer();
    const BigInt kb = (b.re * scale).round_to_integer();
    if (ka != kb) return ka < kb;
    return a.im < b.im;
}

}  // namespace

ComplexRootSet find_roots(const exact::RatPoly& p, unsigned precision_bits) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be at least 1");
    if (precision_bits < 32) throw std::invalid_argument("find_roots: precision below 32 bits");
    const mpfr_prec_t prec = precision_bits;
    const exact::RatPoly monic = p.monic();
    const int n = monic.degree();

    std::vector<BigFloat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (const auto& c : monic.coefficients()) coeffs.emplace_back(c, prec);

    BigFloat radius(1L, prec);
    for (int k = 0; k < n; ++k) radius = max(radius, abs(coeffs[static_cast<std::size_t>(k)]) + BigFloat(1L, prec));

    std::vector<BigComplex> z;
    z.reserve(static_cast<std::size_t>(n));
    const BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
    for (int k = 0; k < n; ++k) {
        // Offset plus a small per-index skew keeps the start off any symmetry axis.
        const BigFloat angle = two_pi * BigFloat(static_cast<long>(k), prec) / BigFloat(static_cast<long>(n), prec) +
                               BigFloat(0.4 + 0.01 * k, prec);
        z.push_back(BigComplex::polar(radius, angle));
    }

    const BigFloat tiny = BigFloat::exp2(-static_cast<long>(precision_bits) + 8, prec);
    // Steps that stop shrinking below this level are rounding noise.
    const BigFloat noise_floor = BigFloat::exp2(-static_cast<long>(3 * precision_bits / 4), prec);
    const BigFloat one(1L, prec);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<BigFloat> last_step(static_cast<std::size_t>(n), BigFloat::exp2(1L << 20, prec));
    const int budget = 400 + 40 * n;
    bool converged = false;
    for (int iter = 0; iter < budget && !converged; ++iter) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            if (done[uk]) continue;
            const Evaluation ev = horner(coeffs, z[uk]);
            if (ev.value.re.is_zero() && ev.value.im.is_zero()) {
                done[uk] = true;
                continue;
            }
            const BigComplex ratio = ev.value / ev.derivative;
            BigComplex repulsion(prec);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                repulsion += BigComplex(one, BigFloat(prec)) / (z[uk] - z[static_cast<std::size_t>(j)]);
            }
            const BigComplex step = ratio / (BigComplex(one, BigFloat(prec)) - ratio * repulsion);
            z[uk] -= step;
            const BigFloat size = abs(step);
            const BigFloat scale = abs(z[uk]) + one;
            const bool stalled = size * BigFloat(2L, prec) >= last_step[uk] && size <= noise_floor * scale;
            if (size <= tiny * scale || stalled) {
                done[uk] = true;
            } else {
                converged = false;
            }
            last_step[uk] = size;
        }
    }
    if (!converged) throw NonConvergence("Aberth iteration did not converge within its budget");

    std::vector<BigFloat> magnitudes;
    magnitudes.reserve(coeffs.size());
    for (const auto& c : coeffs) magnitudes.push_back(abs(c));
    // Running bound on the rounding error of one Horner evaluation at z.
    const BigFloat unit = BigFloat::exp2(-static_cast<long>(precision_bits) + 4, prec) *
                          BigFloat(static_cast<long>(n) + 1, prec);
    auto evaluation_error = [&](const BigComplex& at) {
        const BigFloat r = abs(at);
        BigFloat acc(prec);
        for (auto it = magnitudes.rbegin(); it != magnitudes.rend(); ++it) acc = acc * r + *it;
        return unit * acc;
    };

    // Newton polish, then the residual certificate n * (|p| + err) / |p'|.
    BigFloat certified(prec);
    bool vanishing_derivative = false;
    for (auto& root : z) {
        for (int step = 0; step < 2; ++step) {
            const Evaluation ev = horner(coeffs, root);
            if (ev.derivative.re.is_zero() && ev.derivative.im.is_zero()) break;
            root -= ev.value / ev.derivative;
        }
        const Evaluation ev = horner(coeffs, root);
        if (ev.derivative.re.is_zero() && ev.derivative.im.is_zero()) {
            if (!(ev.value.re.is_zero() && ev.value.im.is_zero())) vanishing_derivative = true;
            continue;
        }
        const BigFloat r =
            BigFloat(static_cast<long>(n), prec) * (abs(ev.value) + evaluation_error(root)) / abs(ev.derivative);
        certified = max(certified, r);
    }

    BigFloat closest = BigFloat::exp2(1L << 20, prec);
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) closest = std::min(closest, abs(z[i] - z[j]));
    // Overlapping inclusion disks cannot certify distinct roots.
    if (vanishing_derivative || closest <= certified * BigFloat(2L, prec)) {
        throw RepeatedRootSuspected("roots cluster; the polynomial appears to have a repeated root");
    }
    const BigFloat limit = BigFloat::exp2(-static_cast<long>(precision_bits / 2), prec);
    if (!(certified <= limit)) {
        const BigFloat cluster = BigFloat::exp2(-static_cast<long>(precision_bits / 4), prec) * radius;
        if (closest <= cluster) {
            throw RepeatedRootSuspected("roots cluster; the polynomial appears to have a repeated root");
        }
        throw NonConvergence("root certificate " + certified.to_string(6) + " exceeds 2^-" +
                             std::to_string(precision_bits / 2));
    }

    const long grid = static_cast<long>(precision_bits / 2);
    std::sort(z.begin(), z.end(), [grid](const BigComplex& a, const BigComplex& b) { return canonical_less(a, b, grid); });
    return ComplexRootSet{std::move(z), certified, p, precision_bits};
}

exact::IntPoly round_to_int_poly(std::span<const BigComplex> coeffs, const BigFloat& tolerance) {
    std::vector<BigInt> out;
    out.reserve(coeffs.size());
    BigFloat worst(tolerance.precision());
    for (const auto& c : coeffs) {
        const BigInt nearest = c.re.round_to_integer();
        const BigFloat distance = max(abs(c.re - BigFloat(nearest, c.precision())), abs(c.im));
        worst = max(worst, distance);
        out.push_back(nearest);
    }
    if (worst > tolerance) {
        throw NotNearInteger("coefficient is " + worst.to_string(6) + " from an integer (tolerance " +
                                 tolerance.to_string(6) + ")",
                             worst.to_double());
    }
    return exact::IntPoly(std::move(out));
}

namespace {

/// Coefficients (low first) of prod (x + a_i) for nonnegative reals a_i.
std::vector<BigFloat> expand_positive(const std::vector<BigFloat>& a, mpfr_prec_t prec) {
    std::vector<BigFloat> c{BigFloat(1L, prec)};
    for (const BigFloat& r : a) {
        std::vector<BigFloat> next(c.size() + 1, BigFloat(prec));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] = next[k + 1] + c[k];
            next[k] = next[k] + c[k] * r;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

BigFloat expansion_error_bound(std::span<const BigComplex> values, std::span<const BigFloat> errors) {
    if (values.size() != errors.size()) throw std::invalid_argument("expansion_error_bound: size mismatch");
    mpfr_prec_t prec = 64;
    for (const auto& v : values) prec = std::max(prec, v.precision());
    std::vector<BigFloat> moduli, widened;
    for (std::size_t i = 0; i < values.size(); ++i) {
        moduli.push_back(abs(values[i]));
        widened.push_back(moduli.back() + errors[i]);
    }
    // |e_k(w) - e_k(z)| <= e_k(|z| + err) - e_k(|z|); the expansion's own
    // rounding is a few ulps of e_k(|z| + err) per multiplication.
    const auto upper = expand_positive(widened, prec);
    const auto lower = expand_positive(moduli, prec);
    const BigFloat ulps = BigFloat::exp2(-static_cast<long>(prec) + 4, prec) * BigFloat(static_cast<long>(values.size() + 1), prec);
    BigFloat worst(prec);
    for (std::size_t k = 0; k < upper.size(); ++k) worst = max(worst, (upper[k] - lower[k]) + upper[k] * ulps);
    return worst;
}

}  // namespace sextic::roots
