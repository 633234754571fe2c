#include "sextic/resolvents/bipoly.hpp"

#include <cctype>
#include <vector>

#include "sextic/errors.hpp"

namespace sextic::resolvents {

BiPoly::BiPoly(long constant) {
    if (constant != 0) terms_[{0, 0}] = BigInt(constant);
}

BiPoly BiPoly::monomial(const BigInt& c, int d_power, int e_power) {
    BiPoly out;
    out.add_term({d_power, e_power}, c);
    return out;
}

void BiPoly::add_term(const Key& k, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt BiPoly::coefficient(int d_power, int e_power) const {
    const auto it = terms_.find({d_power, e_power});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigRational BiPoly::eval(const BigRational& d, const BigRational& e) const {
    BigRational sum;
    for (const auto& [k, c] : terms_) sum = sum + BigRational(c) * pow(d, static_cast<unsigned>(k.first)) * pow(e, static_cast<unsigned>(k.second));
    return sum;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, BigInt>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [k, c] : ordered) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string factors;
        const auto append = [&](const std::string& f) { factors += factors.empty() ? f : "*" + f; };
        if (magnitude != 1 || (k.first == 0 && k.second == 0)) append(magnitude.get_str());
        if (k.first == 1) append("d");
        if (k.first > 1) append("d^" + std::to_string(k.first));
        if (k.second == 1) append("e");
        if (k.second > 1) append("e^" + std::to_string(k.second));
        out += factors;
    }
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
    BiPoly out(1);
    for (unsigned i = 0; i < exponent; ++i) out = out * base;
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BiPoly run() {
        BiPoly value = expression();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BiPoly expression() {
        BiPoly value;
        bool first = true;
        while (true) {
            const char c = peek();
            bool negative = false;
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            BiPoly t = term();
            value += negative ? -t : t;
            first = false;
        }
        return value;
    }

    BiPoly term() {
        BiPoly value = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                value = value * factor();
            } else if (c == '(' || c == 'd' || c == 'e' || std::isdigit(static_cast<unsigned char>(c))) {
                value = value * factor();
            } else {
                return value;
            }
        }
    }

    BiPoly factor() {
        BiPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            const bool braced = pos_ < text_.size() && text_[pos_] == '{';
            if (braced) ++pos_;
            const unsigned exponent = static_cast<unsigned>(number().get_ui());
            if (braced) {
                if (peek() != '}') fail("missing '}'");
                ++pos_;
            }
            base = pow(base, exponent);
        }
        return base;
    }

    BiPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            BiPoly inner = expression();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return inner;
        }
        if (c == 'd' || c == 'e') {
            ++pos_;
            return BiPoly::monomial(BigInt(1), c == 'd' ? 1 : 0, c == 'e' ? 1 : 0);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::monomial(number(), 0, 0);
        fail("unexpected character");
    }

    BigInt number() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly BiPoly::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace sextic::resolvents
