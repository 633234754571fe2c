#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/groups/perm_group.hpp"
#include "sextic/roots/root_finder.hpp"

namespace sextic::groups {

using Exponents = std::array<std::uint8_t, kPoints>;

/// Formal sum of monomials in the root variables u1..u6, kept as a sorted
/// multiset of exponent vectors. Every term has the same total degree.
class MonomialSum {
public:
    MonomialSum() = default;
    explicit MonomialSum(std::vector<Exponents> terms);

    /// Parses e.g. "u1^2u2u3u4^2u5u6 + u1u2^2u3u4u5^2u6". Also accepts
    /// "u_1", "u_{1}", "*" between factors and "^{2}". Coefficients are not
    /// supported; repeat a term instead.
    static MonomialSum parse(std::string_view text);

    const std::vector<Exponents>& terms() const { return terms_; }
    int degree() const;
    std::string to_string() const;

    friend auto operator<=>(const MonomialSum&, const MonomialSum&) = default;

private:
    std::vector<Exponents> terms_;
};

/// Renames variables: u_i becomes u_{s(i)} in every term.
MonomialSum act(const Perm& s, const MonomialSum& m);

/// Brute force over S6.
PermGroup stabilizer(const MonomialSum& m);

struct OrbitEntry {
    MonomialSum sum;
    /// First permutation, in lexicographic order of S6, carrying the input to sum.
    Perm witness;
};

/// Distinct images under S6, in order of first occurrence while scanning S6
/// lexicographically. The input itself always comes first.
std::vector<OrbitEntry> orbit(const MonomialSum& m);

struct InvariantValue {
    roots::BigComplex value;
    /// Bound on |value - exact value| given the roots' error radius.
    roots::BigFloat error;
};

/// Sum over terms of prod u_i^{a_i} with u_i = roots[i].
InvariantValue eval_monomial_sum(const MonomialSum& m, const roots::ComplexRootSet& roots);

/// theta_1 = u1^2u2u3u4^2u5u6 + u1u2^2u3u4u5^2u6 + u1u2u3^2u4u5u6^2.
const MonomialSum& theta1();
/// phi_1 = u1u2u3(u1 + u2 + u3) + u4u5u6(u4 + u5 + u6).
const MonomialSum& phi1();

/// J = S2 wr S3, generated by (123)(456), (12)(45), (14).
const PermGroup& group_j();
/// K = stabilizer of phi_1 (S3 wr Z2).
const PermGroup& group_k();
/// L = J n A6; also generated by (123)(456), (12)(45), (14)(25).
const PermGroup& group_l();
/// M = K n A6; also generated by (123), (14)(25)(36).
const PermGroup& group_m();

}  // namespace sextic::groups
