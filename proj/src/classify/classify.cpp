#include "sextic/classify/classify.hpp"

#include <algorithm>
#include <bit>

#include "sextic/errors.hpp"
#include "sextic/util/parallel.hpp"

namespace sextic::classify {

using exact::BigInt;
using exact::IntPoly;
using roots::BigComplex;
using roots::BigFloat;

const char* to_string(GroupBound bound) {
    switch (bound) {
        case GroupBound::SubgroupOfJ: return "J";
        case GroupBound::SubgroupOfK: return "K";
        case GroupBound::SubgroupOfL: return "L";
        case GroupBound::SubgroupOfM: return "M";
        case GroupBound::SubgroupOfD6: return "D6";
        case GroupBound::NotSolvableBound: return "not-solvable";
        case GroupBound::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Solvable verdict) {
    switch (verdict) {
        case Solvable::Yes: return "yes";
        case Solvable::No: return "no";
        case Solvable::NotApplicable: return "not-applicable";
    }
    return "?";
}

int bound_order(GroupBound bound) {
    switch (bound) {
        case GroupBound::SubgroupOfJ: return 48;
        case GroupBound::SubgroupOfK: return 72;
        case GroupBound::SubgroupOfL: return 24;
        case GroupBound::SubgroupOfM: return 36;
        case GroupBound::SubgroupOfD6: return 12;
        default: return 0;
    }
}

namespace {

enum class SubsetOutcome { Factor, NotFactor, NeedPrecision };

/// Whether the roots indexed by `mask` are the roots of a rational factor.
SubsetOutcome test_subset(const RatPoly& p, const BigInt& lead, const roots::ComplexRootSet& set, unsigned mask) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(set.precision_bits);
    std::vector<BigComplex> chosen;
    std::vector<BigFloat> errors;
    for (std::size_t i = 0; i < set.roots.size(); ++i) {
        if ((mask >> i) & 1U) {
            chosen.push_back(set.roots[i]);
            errors.push_back(set.error_radius);
        }
    }
    // lead(P) * prod (x - r) is integral whenever the subset spans a factor of
    // the primitive form P (Gauss's lemma).
    const BigFloat scale(lead, prec);
    auto coeffs = roots::expand_from_roots(chosen);
    for (auto& c : coeffs) c = c * scale;
    const BigFloat bound = roots::expansion_error_bound(chosen, errors) * abs(scale);
    const BigFloat quarter(0.25, prec);
    if (!(bound < quarter)) return SubsetOutcome::NeedPrecision;
    IntPoly candidate;
    try {
        candidate = roots::round_to_int_poly(coeffs, bound);
    } catch (const NotNearInteger&) {
        return SubsetOutcome::NotFactor;
    }
    return exact::poly_divide_exact(p, candidate.to_rational()) ? SubsetOutcome::Factor : SubsetOutcome::NotFactor;
}

}  // namespace

bool is_irreducible(const RatPoly& p, unsigned precision_bits) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("is_irreducible: degree must be at least 1");
    if (n > 6) throw std::invalid_argument("is_irreducible: degree must be at most 6");
    if (n == 1) return true;
    if (exact::resultant(p, p.derivative()).is_zero()) return false;  // shares a factor with p'
    const BigInt lead = IntPoly::primitive_of(p).first.leading();

    for (unsigned bits = precision_bits;; bits *= 2) {
        bool certified = false;
        try {
            const auto set = roots::find_roots(p, bits);
            certified = true;
            for (unsigned mask = 1; mask < (1U << n) && certified; ++mask) {
                const int size = std::popcount(mask);
                if (2 * size > n) continue;
                switch (test_subset(p, lead, set, mask)) {
                    case SubsetOutcome::Factor: return false;
                    case SubsetOutcome::NotFactor: break;
                    case SubsetOutcome::NeedPrecision: certified = false; break;
                }
            }
        } catch (const NonConvergence&) {
        } catch (const RepeatedRootSuspected&) {
        }
        if (certified) return true;
        if (bits >= roots::kMaxPrecisionBits) break;
    }
    throw PrecisionExhausted("cannot certify irreducibility of " + p.to_string());
}

std::vector<BigRational> rational_roots_robust(const RatPoly& p, const ClassifyOptions& options) {
    try {
        return exact::rational_roots(p, options.limits);
    } catch (const FactoringExhausted&) {
    }
    // Squarefree part, then each rational root r = a/b has b | lead of the
    // primitive form, so lead * r is an integer near lead * z.
    RatPoly a = p;
    RatPoly b = p.derivative();
    while (b.degree() >= 0) {
        RatPoly r = exact::poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    RatPoly squarefree = a.degree() > 0 ? *exact::poly_divide_exact(p, a) : p;
    std::vector<BigRational> found;
    if (squarefree.degree() >= 1 && squarefree[0] == 0) {
        found.emplace_back(0);
        squarefree = *exact::poly_divide_exact(squarefree, RatPoly::x());
    }
    if (squarefree.degree() < 1) return found;
    const BigInt lead = IntPoly::primitive_of(squarefree).first.leading();
    for (unsigned bits = options.precision_bits;; bits *= 2) {
        try {
            const auto set = roots::find_roots(squarefree, bits);
            const BigFloat scale(lead, static_cast<mpfr_prec_t>(bits));
            const BigFloat bound = set.error_radius * abs(scale);
            if (bound < BigFloat(0.25, static_cast<mpfr_prec_t>(bits))) {
                for (const auto& z : set.roots) {
                    if (abs(z.im) * abs(scale) > bound) continue;
                    const BigInt k = (z.re * scale).round_to_integer();
                    const BigRational candidate(k, lead);
                    if (exact::poly_eval(squarefree, candidate) == 0) found.push_back(candidate);
                }
                std::sort(found.begin(), found.end());
                found.erase(std::unique(found.begin(), found.end()), found.end());
                return found;
            }
        } catch (const NonConvergence&) {
        } catch (const RepeatedRootSuspected&) {
        }
        if (bits >= roots::kMaxPrecisionBits) break;
    }
    throw PrecisionExhausted("cannot isolate the rational roots of " + p.to_string());
}

std::optional<ReducedSextic> as_reduced(const RatPoly& p) {
    if (p.degree() != 6) return std::nullopt;
    const RatPoly m = p.monic();
    if (m[5] != 0 || m[4] != 0 || m[3] != 0 || m[2] != 1) return std::nullopt;
    return ReducedSextic{m[1], m[0]};
}

namespace {

void note_repeated(const RatPoly& resolvent, const std::vector<BigRational>& found, const char* name,
                   std::vector<std::string>& notes) {
    if (resolvents::discriminant_exact(resolvent) != 0) return;
    notes.push_back(std::string(name) + " resolvent has a repeated root");
    const RatPoly derivative = resolvent.derivative();
    for (const auto& r : found) {
        if (exact::poly_eval(derivative, r) == 0) {
            notes.push_back(std::string(name) + " root " + r.to_string() +
                            " is repeated, so it does not certify the containment by itself");
        }
    }
}

}  // namespace

ClassificationReport classify(const RatPoly& p, const ClassifyOptions& options) {
    if (p.degree() != 6) throw DegenerateSextic("not a sextic: " + p.to_string());
    ClassificationReport report;
    report.input = p;
    report.discriminant = resolvents::discriminant_exact(p);
    if (report.discriminant == 0) throw DegenerateSextic("sextic has a repeated root: " + p.to_string());
    report.irreducible = is_irreducible(p, options.precision_bits);

    report.reduced = as_reduced(p);
    if (report.reduced) {
        report.f = resolvents::f_fitted(*report.reduced);
        report.g = resolvents::g_fitted(*report.reduced);
        report.notes.push_back("resolvents from the closed forms in d, e");
    } else {
        report.f = resolvents::resolvent_numeric(p, resolvents::ResolventKind::ThetaJ, options.precision_bits).for_input();
        report.g = resolvents::resolvent_numeric(p, resolvents::ResolventKind::PhiK, options.precision_bits).for_input();
        report.notes.push_back("resolvents computed from the roots");
    }
    report.f_roots = rational_roots_robust(report.f, options);
    report.g_roots = rational_roots_robust(report.g, options);
    note_repeated(report.f, report.f_roots, "theta", report.notes);
    note_repeated(report.g, report.g_roots, "phi", report.notes);

    report.sqrt_discriminant = exact::is_rational_square(report.discriminant);

    const bool in_j = !report.f_roots.empty();
    const bool in_k = !report.g_roots.empty();
    const bool square = report.sqrt_discriminant.has_value();
    if (!report.irreducible) {
        report.bound = GroupBound::Inconclusive;
        report.solvable = Solvable::NotApplicable;
        report.notes.push_back("reducible: the resolvent criteria assume an irreducible sextic");
        return report;
    }
    if (in_j && in_k) {
        report.bound = GroupBound::SubgroupOfD6;
        if (square) report.notes.push_back("discriminant is a square, so G also lies in A6");
    } else if (in_j) {
        report.bound = square ? GroupBound::SubgroupOfL : GroupBound::SubgroupOfJ;
    } else if (in_k) {
        report.bound = square ? GroupBound::SubgroupOfM : GroupBound::SubgroupOfK;
    } else {
        report.bound = GroupBound::NotSolvableBound;
    }
    report.solvable = in_j || in_k ? Solvable::Yes : Solvable::No;
    return report;
}

SearchResult search_reduced(const std::vector<BigRational>& d_values, const std::vector<BigRational>& e_values,
                            const ClassifyOptions& options, unsigned jobs) {
    const std::size_t count = d_values.size() * e_values.size();
    std::vector<std::optional<ClassificationReport>> reports(count);
    std::vector<std::string> errors(count);
    util::parallel_for(count, jobs, [&](std::size_t i) {
        const ReducedSextic s{d_values[i / e_values.size()], e_values[i % e_values.size()]};
        try {
            reports[i] = classify(s.polynomial(), options);
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    });
    SearchResult result;
    result.examined = count;
    for (std::size_t i = 0; i < count; ++i) {
        const BigRational& d = d_values[i / e_values.size()];
        const BigRational& e = e_values[i % e_values.size()];
        if (!errors[i].empty()) {
            result.failures.push_back({d, e, errors[i]});
        } else if (reports[i]->solvable == Solvable::Yes) {
            result.hits.push_back({d, e, std::move(*reports[i])});
        }
    }
    return result;
}

ReducedSextic eq7_family(const BigRational& d) {
    if (d.is_zero()) throw ZeroD("the constant-term family needs d != 0");
    return {d, (BigRational(32) * pow(d, 4) + 3) / (BigRational(144) * d * d)};
}

}  // namespace sextic::classify
