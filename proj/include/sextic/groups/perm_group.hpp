#pragma once

#include <map>
#include <span>
#include <vector>

#include "sextic/groups/perm.hpp"

namespace sextic::groups {

/// Subgroup of S6 held as its explicit, sorted element list.
class PermGroup {
public:
    /// Closure of the generators; the empty list gives the trivial group.
    static PermGroup generate(std::span<const Perm> generators);
    static PermGroup generate(std::initializer_list<const char*> cycle_strings);
    /// Elements must already form a group; a small generating set is
    /// recovered greedily from the sorted element list.
    static PermGroup from_elements(std::vector<Perm> elements);
    static PermGroup symmetric();
    static PermGroup alternating();

    std::size_t order() const { return elements_.size(); }
    std::size_t index() const { return kSymmetricOrder / elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& p) const;
    bool is_subgroup_of(const PermGroup& other) const;
    bool is_abelian() const;
    bool is_transitive() const;
    /// element order -> number of elements of that order.
    std::map<int, int> element_order_counts() const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elements_ == b.elements_; }

private:
    PermGroup(std::vector<Perm> elements, std::vector<Perm> generators);
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
};

PermGroup intersect(const PermGroup& a, const PermGroup& b);
/// The even permutations of g, i.e. g intersected with A6.
PermGroup parity_subgroup(const PermGroup& g);

/// Identifies the dihedral group of order 12 by invariants: order 12,
/// nonabelian, and element orders {1: 1, 2: 7, 3: 2, 6: 2}. Among groups
/// of order 12 only D6 has this profile.
bool is_dihedral_of_order_12(const PermGroup& g);

}  // namespace sextic::groups
