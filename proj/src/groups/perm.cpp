#include "sextic/groups/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sextic/errors.hpp"

namespace sextic::groups {

Perm::Perm() { std::iota(images_.begin(), images_.end(), std::uint8_t{0}); }

Perm::Perm(const std::array<std::uint8_t, kPoints>& images) : images_(images) {
    std::array<bool, kPoints> seen{};
    for (auto v : images_) {
        if (v >= kPoints || seen[v]) throw std::invalid_argument("Perm: images are not a bijection of 6 points");
        seen[v] = true;
    }
}

Perm Perm::parse(std::string_view text) {
    Perm result;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
        ++i;
        std::vector<int> cycle;
        skip();
        while (i < text.size() && text[i] != ')') {
            const char c = text[i];
            if (c < '1' || c > '0' + kPoints) {
                throw ParseError("invalid point '" + std::string(1, c) + "' in permutation '" + std::string(text) + "'");
            }
            cycle.push_back(c - '1');
            ++i;
            skip();
        }
        if (i == text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
        ++i;
        std::array<bool, kPoints> used{};
        for (int p : cycle) {
            if (used[static_cast<std::size_t>(p)]) throw ParseError("repeated point in cycle of '" + std::string(text) + "'");
            used[static_cast<std::size_t>(p)] = true;
        }
        // Cycles compose right to left, matching operator*.
        std::array<std::uint8_t, kPoints> images;
        std::iota(images.begin(), images.end(), std::uint8_t{0});
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            images[static_cast<std::size_t>(cycle[k])] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
        }
        result = result * Perm(images);
        skip();
    }
    return result;
}

Perm Perm::operator*(const Perm& rhs) const {
    std::array<std::uint8_t, kPoints> out;
    for (std::size_t i = 0; i < kPoints; ++i) out[i] = images_[rhs.images_[i]];
    return Perm(out);
}

Perm Perm::inverse() const {
    std::array<std::uint8_t, kPoints> out;
    for (std::size_t i = 0; i < kPoints; ++i) out[images_[i]] = static_cast<std::uint8_t>(i);
    return Perm(out);
}

bool Perm::is_identity() const { return *this == Perm(); }

bool Perm::is_even() const {
    int transpositions = 0;
    std::array<bool, kPoints> seen{};
    for (std::size_t i = 0; i < kPoints; ++i) {
        if (seen[i]) continue;
        int length = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 == 0;
}

int Perm::order() const {
    int result = 1;
    std::array<bool, kPoints> seen{};
    for (std::size_t i = 0; i < kPoints; ++i) {
        if (seen[i]) continue;
        int length = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++length;
        }
        result = std::lcm(result, length);
    }
    return result;
}

std::string Perm::to_string() const {
    std::string out;
    std::array<bool, kPoints> seen{};
    for (std::size_t i = 0; i < kPoints; ++i) {
        if (seen[i] || images_[i] == i) continue;
        out += '(';
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            out += static_cast<char>('1' + j);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

const std::vector<Perm>& symmetric_group_elements() {
    static const std::vector<Perm> all = [] {
        std::vector<Perm> out;
        out.reserve(kSymmetricOrder);
        std::array<std::uint8_t, kPoints> images;
        std::iota(images.begin(), images.end(), std::uint8_t{0});
        do {
            out.emplace_back(images);
        } while (std::next_permutation(images.begin(), images.end()));
        return out;
    }();
    return all;
}

}  // namespace sextic::groups
