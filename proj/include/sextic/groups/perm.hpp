#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sextic::groups {

inline constexpr int kPoints = 6;
inline constexpr std::size_t kSymmetricOrder = 720;

/// Permutation of six points, stored 0-based. Composition is right to left:
/// (s * t)(i) = s(t(i)).
class Perm {
public:
    Perm();
    explicit Perm(const std::array<std::uint8_t, kPoints>& images);

    /// Cycle notation with 1-based points, e.g. "(123)(456)" or "(1 4)(2,5)".
    /// Whitespace and commas are ignored; "()" or "" is the identity.
    static Perm parse(std::string_view cycles);

    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::array<std::uint8_t, kPoints>& images() const { return images_; }

    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    bool is_identity() const;
    bool is_even() const;
    int order() const;

    /// Disjoint cycles, 1-based, fixed points omitted; "()" for the identity.
    std::string to_string() const;

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::array<std::uint8_t, kPoints> images_;
};

/// All 720 permutations in lexicographic order of their image arrays.
const std::vector<Perm>& symmetric_group_elements();

}  // namespace sextic::groups
