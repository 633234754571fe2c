#include "sextic/groups/monomial_sum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sextic/errors.hpp"

namespace sextic::groups {

using roots::BigComplex;
using roots::BigFloat;

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MonomialSum::MonomialSum(std::vector<Exponents> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    for (const auto& t : terms_) {
        if (total(t) != total(terms_.front())) throw std::invalid_argument("MonomialSum: terms differ in total degree");
    }
}

MonomialSum MonomialSum::parse(std::string_view text) {
    std::vector<Exponents> terms;
    std::size_t i = 0;
    const auto fail = [&](const std::string& why) {
        throw ParseError("monomial sum '" + std::string(text) + "': " + why);
    };
    const auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    };
    const auto read_number = [&]() -> int {
        const bool braced = i < text.size() && text[i] == '{';
        if (braced) ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 255) fail("exponent too large");
            ++i;
        }
        if (braced) {
            if (i >= text.size() || text[i] != '}') fail("missing '}'");
            ++i;
        }
        return value;
    };

    skip();
    if (i == text.size()) fail("empty");
    while (true) {
        Exponents term{};
        bool any = false;
        skip();
        while (i < text.size() && text[i] == 'u') {
            ++i;
            if (i < text.size() && text[i] == '_') ++i;
            const int var = read_number();
            if (var < 1 || var > kPoints) fail("variable index out of range");
            int power = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                power = read_number();
            }
            const int updated = term[static_cast<std::size_t>(var - 1)] + power;
            if (updated > 255) fail("exponent too large");
            term[static_cast<std::size_t>(var - 1)] = static_cast<std::uint8_t>(updated);
            any = true;
            skip();
        }
        if (!any) fail("expected a monomial at offset " + std::to_string(i));
        terms.push_back(term);
        if (i == text.size()) break;
        if (text[i] != '+') fail("unexpected '" + std::string(1, text[i]) + "'");
        ++i;
    }
    try {
        return MonomialSum(std::move(terms));
    } catch (const std::invalid_argument&) {
        fail("terms differ in total degree");
    }
    return {};
}

int MonomialSum::degree() const { return terms_.empty() ? 0 : total(terms_.front()); }

std::string MonomialSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        bool constant = true;
        for (std::size_t v = 0; v < kPoints; ++v) {
            if (t[v] == 0) continue;
            constant = false;
            out += 'u';
            out += static_cast<char>('1' + v);
            if (t[v] > 1) out += "^" + std::to_string(t[v]);
        }
        if (constant) out += '1';
    }
    return out;
}

MonomialSum act(const Perm& s, const MonomialSum& m) {
    std::vector<Exponents> out;
    out.reserve(m.terms().size());
    for (const auto& t : m.terms()) {
        Exponents moved{};
        for (std::size_t v = 0; v < kPoints; ++v) moved[static_cast<std::size_t>(s(static_cast<int>(v)))] = t[v];
        out.push_back(moved);
    }
    return MonomialSum(std::move(out));
}

PermGroup stabilizer(const MonomialSum& m) {
    std::vector<Perm> fixing;
    for (const Perm& s : symmetric_group_elements()) {
        if (act(s, m) == m) fixing.push_back(s);
    }
    return PermGroup::from_elements(std::move(fixing));
}

std::vector<OrbitEntry> orbit(const MonomialSum& m) {
    std::vector<OrbitEntry> out;
    std::vector<MonomialSum> seen;
    for (const Perm& s : symmetric_group_elements()) {
        MonomialSum image = act(s, m);
        const auto pos = std::lower_bound(seen.begin(), seen.end(), image);
        if (pos != seen.end() && *pos == image) continue;
        seen.insert(pos, image);
        out.push_back({std::move(image), s});
    }
    return out;
}

InvariantValue eval_monomial_sum(const MonomialSum& m, const roots::ComplexRootSet& set) {
    if (set.roots.size() != kPoints) throw std::invalid_argument("eval_monomial_sum: need exactly six roots");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(set.precision_bits);
    int max_power = 0;
    for (const auto& t : m.terms())
        for (auto a : t) max_power = std::max<int>(max_power, a);

    // powers[v][k] = roots[v]^k, with |roots[v]|^k and (|roots[v]| + r)^k alongside.
    std::vector<std::vector<BigComplex>> powers(kPoints);
    std::vector<std::vector<BigFloat>> modulus(kPoints), widened(kPoints);
    for (std::size_t v = 0; v < kPoints; ++v) {
        const BigFloat a = abs(set.roots[v]);
        const BigFloat w = a + set.error_radius;
        powers[v].emplace_back(BigFloat(1L, prec), BigFloat(prec));
        modulus[v].emplace_back(1L, prec);
        widened[v].emplace_back(1L, prec);
        for (int k = 1; k <= max_power; ++k) {
            powers[v].push_back(powers[v].back() * set.roots[v]);
            modulus[v].push_back(modulus[v].back() * a);
            widened[v].push_back(widened[v].back() * w);
        }
    }

    BigComplex value{BigFloat(prec), BigFloat(prec)};
    BigFloat perturbation(prec);
    BigFloat magnitude(prec);
    for (const auto& t : m.terms()) {
        BigComplex product(BigFloat(1L, prec), BigFloat(prec));
        BigFloat exact_bound(1L, prec);
        BigFloat float_bound(1L, prec);
        for (std::size_t v = 0; v < kPoints; ++v) {
            if (t[v] == 0) continue;
            product = product * powers[v][t[v]];
            exact_bound = exact_bound * widened[v][t[v]];
            float_bound = float_bound * modulus[v][t[v]];
        }
        value += product;
        // |prod u^a - prod z^a| <= prod (|z| + r)^a - prod |z|^a.
        perturbation = perturbation + (exact_bound - float_bound);
        magnitude = magnitude + exact_bound;
    }
    // Rounding: each term takes at most 2 * degree complex multiplications
    // and one addition; 4 ulps per operation is generous for MPFR's
    // correctly rounded primitives.
    const long ops = 2L * m.degree() + 2L + static_cast<long>(m.terms().size());
    const BigFloat rounding = magnitude * BigFloat::exp2(-static_cast<long>(prec) + 3, prec) * BigFloat(ops, prec);
    const BigFloat slack(1.0 + 1e-9, prec);
    return {value, (perturbation + rounding) * slack};
}

const MonomialSum& theta1() {
    static const MonomialSum value = MonomialSum::parse("u1^2u2u3u4^2u5u6 + u1u2^2u3u4u5^2u6 + u1u2u3^2u4u5u6^2");
    return value;
}

const MonomialSum& phi1() {
    static const MonomialSum value =
        MonomialSum::parse("u1^2u2u3 + u1u2^2u3 + u1u2u3^2 + u4^2u5u6 + u4u5^2u6 + u4u5u6^2");
    return value;
}

const PermGroup& group_j() {
    static const PermGroup value = PermGroup::generate({"(123)(456)", "(12)(45)", "(14)"});
    return value;
}

const PermGroup& group_k() {
    static const PermGroup value = stabilizer(phi1());
    return value;
}

const PermGroup& group_l() {
    static const PermGroup value = parity_subgroup(group_j());
    return value;
}

const PermGroup& group_m() {
    static const PermGroup value = parity_subgroup(group_k());
    return value;
}

}  // namespace sextic::groups
