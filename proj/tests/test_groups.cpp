#include <doctest.h>

#include <random>

#include "printed_conjugates.hpp"
#include "sextic/errors.hpp"
#include "sextic/groups/monomial_sum.hpp"

using namespace sextic::groups;
using sextic::roots::BigFloat;

namespace {

MonomialSum random_sum(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> var(0, kPoints - 1);
    const int degree = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<Exponents> terms;
    for (int t = count(rng); t > 0; --t) {
        Exponents e{};
        for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(var(rng))];
        terms.push_back(e);
    }
    return MonomialSum(terms);
}

Perm random_perm(std::mt19937& rng) {
    const auto& all = symmetric_group_elements();
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

}  // namespace

TEST_CASE("cycle notation") {
    const Perm p = Perm::parse("(123)(456)");
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(5) == 3);
    CHECK(p.to_string() == "(123)(456)");
    CHECK(Perm::parse(" ( 1 4 ) ( 2,5 ) ") == Perm::parse("(14)(25)"));
    CHECK(Perm::parse("()").is_identity());
    CHECK(Perm::parse("").is_identity());
    // (12)(23) applies (23) first: 1->2, 2->3->... composes to (123)
    CHECK(Perm::parse("(12)(23)") == Perm::parse("(123)"));
    CHECK_THROWS_AS(Perm::parse("(17)"), sextic::ParseError);
    CHECK_THROWS_AS(Perm::parse("(121)"), sextic::ParseError);
    CHECK_THROWS_AS(Perm::parse("(12"), sextic::ParseError);
    CHECK_THROWS_AS(Perm::parse("12"), sextic::ParseError);
}

TEST_CASE("perm basics") {
    const Perm p = Perm::parse("(123)(45)");
    CHECK(p.order() == 6);
    CHECK_FALSE(p.is_even());
    CHECK((p * p.inverse()).is_identity());
    CHECK(symmetric_group_elements().size() == 720);
    CHECK(symmetric_group_elements().front().is_identity());
}

TEST_CASE("generate") {
    CHECK(group_j().order() == 48);
    CHECK(group_j().index() == 15);
    CHECK(PermGroup::generate(std::vector<Perm>{}).order() == 1);
    CHECK(PermGroup::symmetric().order() == 720);
    CHECK(PermGroup::alternating().order() == 360);
    CHECK(group_j().is_transitive());
    CHECK(group_k().is_transitive());
}

TEST_CASE("stabilizers") {
    CHECK(stabilizer(theta1()) == group_j());
    CHECK(group_k().order() == 72);
    CHECK(group_k().index() == 10);
    CHECK(stabilizer(MonomialSum::parse("u1u2u3u4u5u6")).order() == 720);
}

TEST_CASE("intersections") {
    CHECK(group_l().order() == 24);
    CHECK(group_l().index() == 30);
    CHECK(intersect(group_j(), PermGroup::alternating()) == group_l());
    CHECK(group_l() == PermGroup::generate({"(123)(456)", "(12)(45)", "(14)(25)"}));
    CHECK(group_m().order() == 36);
    CHECK(group_m().index() == 20);
    // (123) and (14)(25)(36) generate only a group of order 18 inside K, and
    // (14)(25)(36) is odd. Replacing it by (1425)(36) gives M.
    const PermGroup pair = PermGroup::generate({"(123)", "(14)(25)(36)"});
    CHECK(pair.order() == 18);
    CHECK(pair.is_subgroup_of(group_k()));
    CHECK_FALSE(Perm::parse("(14)(25)(36)").is_even());
    CHECK(group_m() == PermGroup::generate({"(123)", "(1425)(36)"}));
    const PermGroup jk = intersect(group_j(), group_k());
    CHECK(jk.order() == 12);
    CHECK_FALSE(jk.is_abelian());
    CHECK(is_dihedral_of_order_12(jk));
    CHECK_FALSE(is_dihedral_of_order_12(PermGroup::generate({"(123)", "(12)(34)"})));  // A4
}

TEST_CASE("monomial sum parsing and canonical form") {
    const MonomialSum a = MonomialSum::parse("u_1^2u_2u_3 + u1 u2 u3^{2}");
    const MonomialSum b = MonomialSum::parse("u1*u2*u3^2+u1^2*u2*u3");
    CHECK(a == b);
    CHECK(a.degree() == 4);
    CHECK(theta1().degree() == 8);
    CHECK(phi1().degree() == 4);
    CHECK(theta1().terms().size() == 3);
    CHECK(phi1().terms().size() == 6);
    CHECK(MonomialSum::parse("u1^2u2").to_string() == "u1^2u2");
    CHECK_THROWS_AS(MonomialSum::parse("u1u2 + u3"), sextic::ParseError);
    CHECK_THROWS_AS(MonomialSum::parse("u7"), sextic::ParseError);
    CHECK_THROWS_AS(MonomialSum::parse("2u1"), sextic::ParseError);
    CHECK_THROWS_AS(MonomialSum::parse(""), sextic::ParseError);
}

TEST_CASE("act examples") {
    CHECK(act(Perm(), theta1()) == theta1());
    CHECK(act(Perm::parse("(45)"), theta1()) == MonomialSum::parse(kPrintedTheta[1].sum));
    CHECK(act(Perm::parse("(14)"), phi1()) == MonomialSum::parse(kPrintedPhi[1].sum));
    CHECK(MonomialSum::parse(kPrintedTheta[0].sum) == theta1());
    CHECK(MonomialSum::parse(kPrintedPhi[0].sum) == phi1());
}

TEST_CASE("orbits") {
    const auto theta = orbit(theta1());
    CHECK(theta.size() == 15);
    CHECK(theta.front().sum == theta1());
    CHECK(theta.front().witness.is_identity());
    for (const auto& entry : theta) CHECK(act(entry.witness, theta1()) == entry.sum);
    CHECK(orbit(phi1()).size() == 10);
    CHECK(orbit(MonomialSum::parse("u1u2u3u4u5u6")).size() == 1);
}

TEST_CASE("printed phi conjugates and their labels") {
    for (const auto& printed : kPrintedPhi) {
        CAPTURE(printed.index);
        CHECK(act(Perm::parse(printed.label), phi1()) == MonomialSum::parse(printed.sum));
    }
}

TEST_CASE("printed theta conjugates: all but the two known misprints agree") {
    const auto computed = orbit(theta1());
    for (const auto& printed : kPrintedTheta) {
        CAPTURE(printed.index);
        if (printed.index == 13) {
            // second term has total degree 7
            CHECK_THROWS_AS(MonomialSum::parse(printed.sum), sextic::ParseError);
            continue;
        }
        const MonomialSum sum = MonomialSum::parse(printed.sum);
        const bool in_orbit =
            std::any_of(computed.begin(), computed.end(), [&](const OrbitEntry& e) { return e.sum == sum; });
        CHECK(in_orbit);
        const bool label_matches = act(Perm::parse(printed.label), theta1()) == sum;
        CHECK(label_matches == (printed.index != 3));
    }
    // The printed theta_3 is the image under (24), and repairing theta_13 to
    // u1^2u2u3u4u5^2u6 in its second term matches its label (26)(45).
    CHECK(act(Perm::parse("(24)"), theta1()) == MonomialSum::parse(kPrintedTheta[2].sum));
    CHECK(act(Perm::parse("(26)(45)"), theta1()) ==
          MonomialSum::parse("u_1u_2^2u_3^2u_4u_5u_6+u_1^2u_2u_3u_4u_5^2u_6+u_1u_2u_3u_4^2u_5u_6^2"));
}

TEST_CASE("eval_monomial_sum matches Vieta") {
    using sextic::exact::RatPoly;
    const RatPoly p = RatPoly::from_high({1, 0, 0, 0, 1, 3, 2});
    const auto roots = sextic::roots::find_roots(p, 256);
    const auto sigma1 = eval_monomial_sum(MonomialSum::parse("u1+u2+u3+u4+u5+u6"), roots);
    CHECK(abs(sigma1.value) <= sigma1.error + BigFloat::exp2(-200, 256));
    const auto sigma6 = eval_monomial_sum(MonomialSum::parse("u1u2u3u4u5u6"), roots);
    CHECK(abs(sigma6.value - sextic::roots::BigComplex(sextic::exact::BigRational(2), 256)) <=
          sigma6.error + BigFloat::exp2(-200, 256));
    CHECK(sigma6.error < BigFloat::exp2(-150, 256));
}

TEST_CASE("property: orbit-stabilizer") {
    CHECK(orbit(theta1()).size() * stabilizer(theta1()).order() == 720);
    CHECK(orbit(phi1()).size() * stabilizer(phi1()).order() == 720);
    std::mt19937 rng(7);
    for (int i = 0; i < 5; ++i) {
        const MonomialSum m = random_sum(rng);
        CAPTURE(m.to_string());
        CHECK(orbit(m).size() * stabilizer(m).order() == 720);
    }
}

TEST_CASE("property: act is a left action") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Perm s = random_perm(rng);
        const Perm t = random_perm(rng);
        const MonomialSum m = random_sum(rng);
        CHECK(act(s * t, m) == act(s, act(t, m)));
    }
}

TEST_CASE("property: exactly the stabilizer fixes theta_1") {
    for (const Perm& s : symmetric_group_elements()) {
        CHECK((act(s, theta1()) == theta1()) == group_j().contains(s));
    }
}

TEST_CASE("property: group invariants") {
    for (const PermGroup* g : {&group_j(), &group_k(), &group_l(), &group_m()}) {
        CHECK(720 % g->order() == 0);
        CHECK(g->contains(Perm()));
        for (const Perm& a : g->elements()) {
            CHECK(g->contains(a.inverse()));
        }
        CHECK(PermGroup::generate(g->generators()) == *g);
    }
}
