#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/exact/algorithms.hpp"
#include "sextic/resolvents/resolvents.hpp"

namespace sextic::classify {

using exact::BigRational;
using exact::RatPoly;
using resolvents::ReducedSextic;

enum class GroupBound {
    SubgroupOfJ,
    SubgroupOfK,
    SubgroupOfL,
    SubgroupOfM,
    SubgroupOfD6,
    NotSolvableBound,
    Inconclusive,
};

enum class Solvable { Yes, No, NotApplicable };

const char* to_string(GroupBound bound);
const char* to_string(Solvable verdict);
/// Order of the group named by the bound, or 0 for the non-group outcomes.
int bound_order(GroupBound bound);

/// Resolvent coefficients can be large; a light factoring budget hands over
/// to the numeric root search early, which is complete on its own.
inline exact::RationalRootLimits light_root_limits() {
    exact::RationalRootLimits limits;
    limits.factoring.trial_bound = 100'000;
    limits.factoring.rho_iterations = 20'000;
    limits.factoring.rho_attempts = 2;
    limits.max_divisors = 5'000;
    limits.max_candidates = 50'000;
    return limits;
}

struct ClassifyOptions {
    unsigned precision_bits = roots::kDefaultPrecisionBits;
    exact::RationalRootLimits limits = light_root_limits();
};

struct ClassificationReport {
    RatPoly input;
    bool irreducible = false;
    /// Set when the monic input has the shape x^6 + x^2 + d x + e; the
    /// resolvents then come from the closed forms instead of the roots.
    std::optional<ReducedSextic> reduced;
    RatPoly f;
    RatPoly g;
    std::vector<BigRational> f_roots;
    std::vector<BigRational> g_roots;
    BigRational discriminant;
    std::optional<BigRational> sqrt_discriminant;
    GroupBound bound = GroupBound::Inconclusive;
    Solvable solvable = Solvable::NotApplicable;
    std::vector<std::string> notes;
};

/// Degree 1..6. Linear, quadratic and cubic factors are sought among subsets
/// of certified complex roots: lead(p) times the subset's elementary
/// symmetric functions must round to integers, and the candidate is then
/// checked by exact division. Throws PrecisionExhausted if the roots cannot
/// be certified finely enough.
bool is_irreducible(const RatPoly& p, unsigned precision_bits = roots::kDefaultPrecisionBits);

/// rational_roots, falling back to rounding certified numeric roots of the
/// squarefree part when factoring the coefficients is too expensive.
std::vector<BigRational> rational_roots_robust(const RatPoly& p, const ClassifyOptions& options = {});

/// Monic form x^6 + x^2 + d x + e, if p has that shape.
std::optional<ReducedSextic> as_reduced(const RatPoly& p);

/// Throws DegenerateSextic for a degree other than 6 or a repeated root.
ClassificationReport classify(const RatPoly& p, const ClassifyOptions& options = {});

struct SearchHit {
    BigRational d;
    BigRational e;
    ClassificationReport report;
};

struct SearchFailure {
    BigRational d;
    BigRational e;
    std::string message;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    std::vector<SearchFailure> failures;
    std::size_t examined = 0;
};

/// Classifies x^6 + x^2 + d x + e over the grid d_values x e_values and
/// keeps the irreducible solvable ones, in grid order (d outer, e inner).
SearchResult search_reduced(const std::vector<BigRational>& d_values, const std::vector<BigRational>& e_values,
                            const ClassifyOptions& options = {}, unsigned jobs = 1);

/// (d, (32d^4 + 3) / (144d^2)); throws ZeroD for d = 0.
ReducedSextic eq7_family(const BigRational& d);

}  // namespace sextic::classify
