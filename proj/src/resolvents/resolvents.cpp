#include "sextic/resolvents/resolvents.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sextic/errors.hpp"
#include "sextic/exact/algorithms.hpp"
#include "sextic/exact/factor.hpp"
#include "sextic/util/parallel.hpp"

namespace sextic::resolvents {

using roots::BigComplex;
using roots::BigFloat;

RatPoly ReducedSextic::polynomial() const { return RatPoly::from_high({1, 0, 0, 0, 1, d, e}); }

int resolvent_degree(ResolventKind kind) { return kind == ResolventKind::ThetaJ ? 15 : 10; }

int invariant_weight(ResolventKind kind) { return kind == ResolventKind::ThetaJ ? 8 : 4; }

const groups::MonomialSum& invariant(ResolventKind kind) {
    return kind == ResolventKind::ThetaJ ? groups::theta1() : groups::phi1();
}

const char* to_string(ResolventKind kind) { return kind == ResolventKind::ThetaJ ? "theta" : "phi"; }

ReducedForm ReducedForm::parse_high_to_low(const std::vector<std::string>& coefficients) {
    std::vector<BiPoly> out;
    out.reserve(coefficients.size());
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out.push_back(BiPoly::parse(*it));
    return ReducedForm(std::move(out));
}

RatPoly ReducedForm::evaluate(const BigRational& d, const BigRational& e) const {
    std::vector<BigRational> values;
    values.reserve(coeffs_.size());
    for (const BiPoly& c : coeffs_) values.push_back(c.eval(d, e));
    return RatPoly(std::move(values));
}

// Reference forms, transcribed term by term.
const ReducedForm& printed_theta_form() {
    static const ReducedForm form = ReducedForm::parse_high_to_low({
        "1",
        "0",
        "-6e^2",
        "-(42e+3)e^3",
        "7e^4",
        "(222e-21d^2)e^5",
        "(453e^2+57e+8)e^6",
        "-(340e-109d^2)e^7",
        "-(1716e^2-288d^2e+17)",
        "-(1232e^3-300e+144d^2)e^9",
        "(1534e^2+538d^2e-353d^4+2)e^{10}",
        "(2592e^3-96d^2e^2-258e+48d^2)e^{11}",
        "-(1728e^4+1012e^2-284d^2e+94d^4-9)e^{12}",
        "(432e^3-2160d^2e^2+792d^4e+118e+5d^2)e^{13}",
        "(1296d^2e^3-27e^2+138d^2e-60d^4-4)e^{14}",
        "(144d^4e-32d^6-3d^2)e^{15}",
    });
    return form;
}

const ReducedForm& printed_phi_form() {
    static const ReducedForm form = ReducedForm::parse_high_to_low({
        "1",
        "4",
        "6",
        "-(66e^2-4)",
        "-(324e^2-58d^2e-1)",
        "-(642e^2-192d^2e+11d^4)",
        "129e^4-640e^2+246d^2e-22d^4",
        "384e^4-74d^2e^3-320e^2+144d^2e-16d^4",
        "384e^4-108d^2e^3+4d^4e^2-64e^2+32d^2e-4d^4",
        "-(64e^6-128e^4-32d^2e^3+40d^4e^2-6d^6e)",
        "-(64e^6-16d^2e^5-64d^2e^3+48d^4e^2-12d^6e+d^8)",
    });
    return form;
}

// Output of reconstruct_reduced(ThetaJ), frozen; a test refits and compares.
// Differs from the printed form at x^12, x^9, x^7 and x^0.
const ReducedForm& fitted_theta_form() {
    static const ReducedForm form = ReducedForm::parse_high_to_low({
        "1",
        "0",
        "-6e^2",
        "-42e^4",
        "7e^4",
        "(222e-21d^2)e^5",
        "(453e^2+8)e^6",
        "-(340e-109d^2)e^7",
        "-(1716e^2-288d^2e+17)e^8",
        "-(1232e^3-300e+144d^2)e^9",
        "(1534e^2+538d^2e-353d^4+2)e^{10}",
        "(2592e^3-96d^2e^2-258e+48d^2)e^{11}",
        "-(1728e^4+1012e^2-284d^2e+94d^4-9)e^{12}",
        "(432e^3-2160d^2e^2+792d^4e+118e+5d^2)e^{13}",
        "(1296d^2e^3-27e^2+138d^2e-60d^4-4)e^{14}",
        "-(144d^4e-32d^6-3d^2)e^{15}",
    });
    return form;
}

// The refit reproduces the printed degree-10 form exactly.
const ReducedForm& fitted_phi_form() { return printed_phi_form(); }

const BiPoly& printed_discriminant_form() {
    static const BiPoly form = BiPoly::parse("46656e^5+13824e^3-43200d^2e^2+22500d^4e+1024e-3125d^6-256d^2");
    return form;
}

RatPoly f_reduced(const ReducedSextic& s) { return printed_theta_form().evaluate(s.d, s.e); }
RatPoly g_reduced(const ReducedSextic& s) { return printed_phi_form().evaluate(s.d, s.e); }
RatPoly f_fitted(const ReducedSextic& s) { return fitted_theta_form().evaluate(s.d, s.e); }
RatPoly g_fitted(const ReducedSextic& s) { return fitted_phi_form().evaluate(s.d, s.e); }

BigRational discriminant_reduced(const ReducedSextic& s) { return printed_discriminant_form().eval(s.d, s.e); }

BigRational discriminant_exact(const RatPoly& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant_exact: degree must be at least 2");
    const BigRational r = exact::resultant(p, p.derivative()) / p.leading();
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

RatPoly NumericResolvent::for_input() const {
    const unsigned w = static_cast<unsigned>(invariant_weight(kind));
    const int n = poly.degree();
    const BigRational mw = pow(BigRational(scale), w);
    std::vector<BigRational> out;
    for (int k = 0; k <= n; ++k) {
        out.push_back(BigRational(poly[static_cast<std::size_t>(k)]) / pow(mw, static_cast<unsigned>(n - k)));
    }
    return RatPoly(std::move(out));
}

BigInt integral_scale(const RatPoly& monic_sextic) {
    const int n = monic_sextic.degree();
    try {
        std::map<BigInt, unsigned> need;
        for (int k = 0; k < n; ++k) {
            const BigInt& den = monic_sextic[static_cast<std::size_t>(k)].den();
            if (den == 1) continue;
            const unsigned span = static_cast<unsigned>(n - k);
            for (const auto& [prime, power] : exact::factor_integer(den)) {
                need[prime] = std::max(need[prime], (power + span - 1) / span);
            }
        }
        BigInt m = 1;
        for (const auto& [prime, power] : need) {
            BigInt pp;
            mpz_pow_ui(pp.get_mpz_t(), prime.get_mpz_t(), power);
            m *= pp;
        }
        return m;
    } catch (const FactoringExhausted&) {
        // Not minimal, but still integral.
        BigInt m = 1;
        for (int k = 0; k < n; ++k) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), monic_sextic[static_cast<std::size_t>(k)].den().get_mpz_t());
        return m;
    }
}

namespace {

const std::vector<groups::OrbitEntry>& cached_orbit(ResolventKind kind) {
    static const std::vector<groups::OrbitEntry> theta = groups::orbit(groups::theta1());
    static const std::vector<groups::OrbitEntry> phi = groups::orbit(groups::phi1());
    return kind == ResolventKind::ThetaJ ? theta : phi;
}

}  // namespace

IntPoly resolvent_from_roots(const roots::ComplexRootSet& root_set, ResolventKind kind) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(root_set.precision_bits);
    std::vector<BigComplex> values;
    std::vector<BigFloat> errors;
    for (const auto& entry : cached_orbit(kind)) {
        auto v = groups::eval_monomial_sum(entry.sum, root_set);
        values.push_back(std::move(v.value));
        errors.push_back(std::move(v.error));
    }
    const auto coeffs = roots::expand_from_roots(values);
    const BigFloat worst = roots::expansion_error_bound(values, errors);
    const BigFloat quarter(0.25, prec);
    if (!(worst < quarter)) {
        throw NotNearInteger("resolvent coefficient error bound " + worst.to_string(6) + " is too large to round",
                             worst.to_double());
    }
    return roots::round_to_int_poly(coeffs, quarter);
}

NumericResolvent resolvent_numeric(const RatPoly& p, ResolventKind kind, unsigned precision_bits) {
    if (p.degree() != 6) throw DegenerateSextic("resolvent_numeric needs a sextic, got degree " + std::to_string(p.degree()));
    if (exact::resultant(p, p.derivative()).is_zero()) throw DegenerateSextic("sextic has a repeated root: " + p.to_string());
    const RatPoly monic = p.monic();
    const BigInt m = integral_scale(monic);
    std::vector<BigRational> scaled;
    for (int k = 0; k <= 6; ++k) scaled.push_back(monic[static_cast<std::size_t>(k)] * pow(BigRational(m), static_cast<unsigned>(6 - k)));
    const RatPoly q(std::move(scaled));

    std::string last_failure;
    for (unsigned bits = precision_bits;; bits *= 2) {
        try {
            const auto root_set = roots::find_roots(q, bits);
            return NumericResolvent{kind, resolvent_from_roots(root_set, kind), m, bits};
        } catch (const NonConvergence& e) {
            last_failure = e.what();
        } catch (const RepeatedRootSuspected& e) {
            last_failure = e.what();
        } catch (const NotNearInteger& e) {
            last_failure = e.what();
        }
        if (bits >= roots::kMaxPrecisionBits) break;
    }
    throw PrecisionExhausted("no certified " + std::string(to_string(kind)) + " resolvent for " + p.to_string() +
                             " up to " + std::to_string(std::max(precision_bits, roots::kMaxPrecisionBits)) +
                             " bits: " + last_failure);
}

namespace {

struct Sample {
    long d;
    long e;
    IntPoly poly;
};

bool degenerate(long d, long e) {
    return discriminant_exact(ReducedSextic{BigRational(d), BigRational(e)}.polynomial()).is_zero();
}

std::vector<Sample> sample_points(const std::vector<std::pair<long, long>>& points, ResolventKind kind,
                                  const ReconstructionOptions& options) {
    std::vector<Sample> out(points.size());
    util::parallel_for(points.size(), options.jobs, [&](std::size_t i) {
        const auto [d, e] = points[i];
        const auto r = resolvent_numeric(ReducedSextic{BigRational(d), BigRational(e)}.polynomial(), kind,
                                         options.precision_bits);
        out[i] = Sample{d, e, r.poly};
    });
    return out;
}

/// Monomials d^a e^b allowed in the coefficient of x^(N-j).
std::vector<BiPoly::Key> allowed_monomials(int weight) {
    std::vector<BiPoly::Key> out;
    for (int a = 0; 5 * a <= weight; ++a)
        for (int b = 0; 5 * a + 6 * b <= weight; ++b)
            if ((weight - 5 * a - 6 * b) % 4 == 0) out.emplace_back(a, b);
    return out;
}

/// Exact least-squares-free solve of an overdetermined system: returns the
/// unique solution or throws FitInconsistent.
std::vector<mpq_class> solve_exact(std::vector<std::vector<mpq_class>> rows, std::size_t cols, int x_power) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const mpq_class inv = 1 / rows[rank][c];
        for (std::size_t k = c; k <= cols; ++k) rows[rank][k] *= inv;
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const mpq_class factor = rows[r][c];
            for (std::size_t k = c; k <= cols; ++k) rows[r][k] -= factor * rows[rank][k];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    if (rank < cols) {
        throw FitInconsistent("x^" + std::to_string(x_power) + ": sample system has rank " + std::to_string(rank) +
                              " < " + std::to_string(cols) + " unknowns");
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][cols] != 0) {
            throw FitInconsistent("x^" + std::to_string(x_power) +
                                  ": samples are inconsistent with the weighted-degree bound");
        }
    }
    std::vector<mpq_class> solution(cols);
    for (std::size_t i = rank; i-- > 0;) {
        mpq_class v = rows[i][cols];
        for (std::size_t k = pivot_cols[i] + 1; k < cols; ++k) v -= rows[i][k] * solution[k];
        solution[pivot_cols[i]] = v;
    }
    return solution;
}

}  // namespace

ReconstructionReport reconstruct_reduced(ResolventKind kind, const ReconstructionOptions& options) {
    const int n = resolvent_degree(kind);
    const int w = invariant_weight(kind);
    const int max_weight = w * n;
    // Largest d and e powers anywhere; the grid has one more distinct d^2
    // value and two more e values than needed.
    const int max_a = max_weight / 5;
    const int max_b = max_weight / 6;
    const long d_max = max_a / 2 + 1;
    const long e_max = max_b / 2 + 1;

    std::vector<std::pair<long, long>> grid;
    for (long d = 0; d <= d_max; ++d)
        for (long e = -e_max; e <= e_max; ++e)
            if (!degenerate(d, e)) grid.emplace_back(d, e);

    std::mt19937 rng(options.seed);
    std::uniform_int_distribution<long> coord(-3 * e_max, 3 * e_max);
    std::set<std::pair<long, long>> chosen;
    std::vector<std::pair<long, long>> holdout_points;
    while (holdout_points.size() < options.holdouts) {
        const long d = coord(rng);
        const long e = coord(rng);
        const bool on_grid = d >= 0 && d <= d_max && e >= -e_max && e <= e_max;
        if (on_grid || degenerate(d, e) || !chosen.insert({d, e}).second) continue;
        holdout_points.emplace_back(d, e);
    }

    const auto samples = sample_points(grid, kind, options);
    const auto holdouts = sample_points(holdout_points, kind, options);

    ReconstructionReport report{kind, {}, {}, {}, samples.size(), 0, holdouts.size()};
    std::vector<BiPoly> fitted(static_cast<std::size_t>(n + 1));
    util::parallel_for(static_cast<std::size_t>(n + 1), options.jobs, [&](std::size_t k) {
        const int j = n - static_cast<int>(k);
        const auto monomials = allowed_monomials(w * j);
        std::vector<std::vector<mpq_class>> rows;
        rows.reserve(samples.size());
        for (const Sample& s : samples) {
            std::vector<mpq_class> row;
            row.reserve(monomials.size() + 1);
            for (const auto& [a, b] : monomials) {
                BigInt v;
                BigInt ep;
                mpz_pow_ui(v.get_mpz_t(), BigInt(s.d).get_mpz_t(), static_cast<unsigned long>(a));
                mpz_pow_ui(ep.get_mpz_t(), BigInt(std::abs(s.e)).get_mpz_t(), static_cast<unsigned long>(b));
                if (s.e < 0 && b % 2 == 1) ep = -ep;
                row.emplace_back(v * ep);
            }
            const int deg = s.poly.degree();
            row.emplace_back(static_cast<int>(k) <= deg ? mpq_class(s.poly[k]) : mpq_class(0));
            rows.push_back(std::move(row));
        }
        const auto solution = solve_exact(std::move(rows), monomials.size(), static_cast<int>(k));
        BiPoly coefficient;
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            if (solution[i].get_den() != 1) {
                throw FitInconsistent("x^" + std::to_string(k) + ": non-integral coefficient " +
                                      solution[i].get_str());
            }
            coefficient += BiPoly::monomial(solution[i].get_num(), monomials[i].first, monomials[i].second);
        }
        fitted[k] = std::move(coefficient);
    });
    {
        std::size_t unknowns = 0;
        for (int j = 0; j <= n; ++j) unknowns += allowed_monomials(w * j).size();
        report.unknowns = unknowns;
    }
    report.fitted = ReducedForm(std::move(fitted));

    for (const Sample& h : holdouts) {
        if (report.fitted.evaluate(BigRational(h.d), BigRational(h.e)) != h.poly.to_rational()) {
            throw FitInconsistent("fitted " + std::string(to_string(kind)) + " resolvent disagrees with the numeric one at d=" +
                                  std::to_string(h.d) + ", e=" + std::to_string(h.e));
        }
    }

    const ReducedForm& printed = kind == ResolventKind::ThetaJ ? printed_theta_form() : printed_phi_form();
    for (int k = n; k >= 0; --k) {
        const BiPoly& p = printed.coefficients()[static_cast<std::size_t>(k)];
        const BiPoly& f = report.fitted.coefficients()[static_cast<std::size_t>(k)];
        std::set<BiPoly::Key> keys;
        for (const auto& [key, c] : p.terms()) keys.insert(key);
        for (const auto& [key, c] : f.terms()) keys.insert(key);
        for (const auto& key : keys) {
            report.terms.push_back({k, key.first, key.second, p.coefficient(key.first, key.second),
                                    f.coefficient(key.first, key.second)});
        }
        if (p != f) report.discrepancies.push_back({k, p, f});
    }
    return report;
}

}  // namespace sextic::resolvents
