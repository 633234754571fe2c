#include "sextic/groups/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sextic::groups {

namespace {

std::vector<Perm> closure(std::span<const Perm> generators) {
    std::set<Perm> seen{Perm()};
    std::deque<Perm> frontier{Perm()};
    while (!frontier.empty()) {
        const Perm current = frontier.front();
        frontier.pop_front();
        for (const Perm& g : generators) {
            const Perm next = g * current;
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

PermGroup::PermGroup(std::vector<Perm> elements, std::vector<Perm> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {}

PermGroup PermGroup::generate(std::span<const Perm> generators) {
    return PermGroup(closure(generators), {generators.begin(), generators.end()});
}

PermGroup PermGroup::generate(std::initializer_list<const char*> cycle_strings) {
    std::vector<Perm> gens;
    for (const char* s : cycle_strings) gens.push_back(Perm::parse(s));
    return generate(gens);
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<Perm> gens;
    std::vector<Perm> span{Perm()};
    for (const Perm& candidate : elements) {
        if (std::binary_search(span.begin(), span.end(), candidate)) continue;
        gens.push_back(candidate);
        span = closure(gens);
    }
    if (span != elements) throw std::invalid_argument("PermGroup::from_elements: elements are not closed");
    return PermGroup(std::move(elements), std::move(gens));
}

PermGroup PermGroup::symmetric() { return generate({"(12)", "(123456)"}); }

PermGroup PermGroup::alternating() { return parity_subgroup(symmetric()); }

bool PermGroup::contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return other.contains(p); });
}

bool PermGroup::is_abelian() const {
    for (const Perm& a : elements_)
        for (const Perm& b : elements_)
            if (a * b != b * a) return false;
    return true;
}

bool PermGroup::is_transitive() const {
    std::array<bool, kPoints> reached{};
    for (const Perm& p : elements_) reached[static_cast<std::size_t>(p(0))] = true;
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

std::map<int, int> PermGroup::element_order_counts() const {
    std::map<int, int> counts;
    for (const Perm& p : elements_) ++counts[p.order()];
    return counts;
}

PermGroup intersect(const PermGroup& a, const PermGroup& b) {
    std::vector<Perm> common;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(common));
    return PermGroup::from_elements(std::move(common));
}

PermGroup parity_subgroup(const PermGroup& g) {
    std::vector<Perm> even;
    std::copy_if(g.elements().begin(), g.elements().end(), std::back_inserter(even),
                 [](const Perm& p) { return p.is_even(); });
    return PermGroup::from_elements(std::move(even));
}

bool is_dihedral_of_order_12(const PermGroup& g) {
    const std::map<int, int> expected{{1, 1}, {2, 7}, {3, 2}, {6, 2}};
    return g.order() == 12 && !g.is_abelian() && g.element_order_counts() == expected;
}

}  // namespace sextic::groups
