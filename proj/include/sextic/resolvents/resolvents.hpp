#pragma once

#include <string>
#include <vector>

#include "sextic/exact/polynomial.hpp"
#include "sextic/groups/monomial_sum.hpp"
#include "sextic/resolvents/bipoly.hpp"
#include "sextic/roots/root_finder.hpp"

namespace sextic::resolvents {

using exact::IntPoly;
using exact::RatPoly;

/// x^6 + x^2 + d x + e.
struct ReducedSextic {
    BigRational d;
    BigRational e;

    RatPoly polynomial() const;
};

enum class ResolventKind {
    ThetaJ,  // degree 15, roots are the conjugates of theta_1
    PhiK,    // degree 10, roots are the conjugates of phi_1
};

int resolvent_degree(ResolventKind kind);
/// Total degree of the invariant in the roots (8 for theta, 4 for phi).
int invariant_weight(ResolventKind kind);
const groups::MonomialSum& invariant(ResolventKind kind);
const char* to_string(ResolventKind kind);

/// Resolvent of the reduced sextic as polynomials in d, e per power of x;
/// coefficients()[k] multiplies x^k.
class ReducedForm {
public:
    ReducedForm() = default;
    explicit ReducedForm(std::vector<BiPoly> by_x_power) : coeffs_(std::move(by_x_power)) {}
    /// Strings are given from x^degree down to x^0.
    static ReducedForm parse_high_to_low(const std::vector<std::string>& coefficients);

    const std::vector<BiPoly>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    RatPoly evaluate(const BigRational& d, const BigRational& e) const;
    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;

private:
    std::vector<BiPoly> coeffs_;
};

/// The degree-15 and degree-10 reference forms verbatim, misprints included.
const ReducedForm& printed_theta_form();
const ReducedForm& printed_phi_form();
/// The forms recovered by reconstruct_reduced, frozen. The classifier uses these.
const ReducedForm& fitted_theta_form();
const ReducedForm& fitted_phi_form();
const BiPoly& printed_discriminant_form();

RatPoly f_reduced(const ReducedSextic& s);
RatPoly g_reduced(const ReducedSextic& s);
RatPoly f_fitted(const ReducedSextic& s);
RatPoly g_fitted(const ReducedSextic& s);
/// 46656e^5 + 13824e^3 - 43200d^2e^2 + 22500d^4e + 1024e - 3125d^6 - 256d^2.
/// This is the negative of discriminant_exact(s.polynomial()).
BigRational discriminant_reduced(const ReducedSextic& s);

/// (-1)^(n(n-1)/2) Res(p, p') / lead(p).
BigRational discriminant_exact(const RatPoly& p);

/// Resolvent of a sextic computed from its roots.
///
/// The monic form of p is rescaled by the least positive integer m making
/// q(x) = m^6 p(x/m) / lead(p) integral; `poly` is the resolvent of q, whose
/// roots are m^w times those of p's resolvent (w = invariant weight).
struct NumericResolvent {
    ResolventKind kind;
    IntPoly poly;
    BigInt scale;
    unsigned precision_bits = 0;

    /// Monic resolvent of the original p: poly(m^w x) / m^(w * degree).
    RatPoly for_input() const;
};

/// Least m > 0 with m^(6-k) c_k integral for the monic coefficients c_k.
BigInt integral_scale(const RatPoly& monic_sextic);

/// Resolvent from an already computed root set of a monic integer sextic.
/// Throws NotNearInteger when the certified error is too large to round.
IntPoly resolvent_from_roots(const roots::ComplexRootSet& roots, ResolventKind kind);

/// Throws DegenerateSextic (degree != 6 or repeated roots) or
/// PrecisionExhausted once the ladder passes kMaxPrecisionBits.
NumericResolvent resolvent_numeric(const RatPoly& p, ResolventKind kind,
                                   unsigned precision_bits = roots::kDefaultPrecisionBits);

struct TermComparison {
    int x_power;
    int d_power;
    int e_power;
    BigInt printed;
    BigInt fitted;
    bool matches() const { return printed == fitted; }
};

struct Discrepancy {
    int x_power;
    BiPoly printed;
    BiPoly fitted;
};

struct ReconstructionReport {
    ResolventKind kind;
    ReducedForm fitted;
    /// Every (x, d, e) monomial present in either form.
    std::vector<TermComparison> terms;
    std::vector<Discrepancy> discrepancies;
    std::size_t sample_points = 0;
    std::size_t unknowns = 0;
    std::size_t holdout_points = 0;
    bool matches_printed() const { return discrepancies.empty(); }
};

struct ReconstructionOptions {
    unsigned precision_bits = roots::kDefaultPrecisionBits;
    unsigned jobs = 1;
    std::size_t holdouts = 20;
    unsigned seed = 20240229;
};

/// Fits every coefficient of the reduced resolvent as an integer polynomial
/// in d and e from numeric resolvents on an integer grid, validates the fit
/// on random holdout points and diffs it against the printed form.
///
/// The coefficient of x^(N-j) is a polynomial in sigma_4 = 1, sigma_5 = -d,
/// sigma_6 = e of weighted degree w*j, so only monomials d^a e^b with
/// 5a + 6b <= w*j and 5a + 6b = w*j (mod 4) occur. The congruence forces a
/// to be even, so the grid only needs d >= 0.
///
/// Throws FitInconsistent when the grid system has no solution, is rank
/// deficient, or a holdout disagrees.
ReconstructionReport reconstruct_reduced(ResolventKind kind, const ReconstructionOptions& options = {});

}  // namespace sextic::resolvents
