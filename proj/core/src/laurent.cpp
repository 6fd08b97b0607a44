#include "vstring/laurent.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "vstring/error.hpp"

namespace vstring {

namespace {

void require_same(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionError("polynomial dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string variable_name(std::size_t dim, std::size_t i) {
    if (i + 1 == dim) return "v";
    if (dim == 2) return "u";
    return "u" + std::to_string(i + 1);
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t dimension, const Integer& c) {
    LaurentPolynomial p(dimension);
    p.add_term(ExponentIndex::zero(dimension), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentIndex& e, const Integer& c) {
    LaurentPolynomial p(e.size());
    p.add_term(e, c);
    return p;
}

Integer LaurentPolynomial::coefficient(const ExponentIndex& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentIndex& e, const Integer& c) {
    require_same(dim_, e.size());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    require_same(dim_, o.dim_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    require_same(dim_, o.dim_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial out(a.dim_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same(a.dim_, b.dim_);
    LaurentPolynomial out(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }
LaurentPolynomial neg(const LaurentPolynomial& p) { return -p; }

LaurentPolynomial swap_uv(const LaurentPolynomial& p) {
    if (p.dimension() != 2) throw DimensionError("swap_uv needs a two-variable polynomial");
    LaurentPolynomial out(2);
    for (const auto& [e, c] : p.terms()) out.add_term(ExponentIndex{e[1], e[0]}, c);
    return out;
}

LaurentPolynomial eval_monomial_map(const LaurentPolynomial& p, std::span<const MonomialImage> images) {
    if (images.size() != p.dimension()) {
        throw DimensionError("expected " + std::to_string(p.dimension()) + " variable images, got " +
                             std::to_string(images.size()));
    }
    const std::size_t target = images.empty() ? 0 : images[0].exponents.size();
    for (const auto& img : images) {
        require_same(target, img.exponents.size());
        if (img.sign != 1 && img.sign != -1) throw DimensionError("monomial image sign must be +1 or -1");
    }
    LaurentPolynomial out(target);
    for (const auto& [e, c] : p.terms()) {
        ExponentIndex mono = ExponentIndex::zero(target);
        bool negative = false;
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (std::size_t k = 0; k < target; ++k) mono[k] += e[i] * images[i].exponents[k];
            if (images[i].sign < 0 && (e[i] % 2 != 0)) negative = !negative;
        }
        out.add_term(mono, negative ? Integer(-c) : c);
    }
    return out;
}

std::string canonical_string(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono.push_back('*');
            mono += variable_name(e.size(), i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += magnitude.str();
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += magnitude.str() + "*" + mono;
        }
    }
    return out;
}

namespace {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

    LaurentPolynomial run() {
        LaurentPolynomial out(dim_);
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_space();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            parse_term(out, sign);
            skip_space();
        }
        return out;
    }

private:
    void parse_term(LaurentPolynomial& out, int sign) {
        Integer coefficient = 1;
        ExponentIndex e = ExponentIndex::zero(dim_);
        bool have_factor = false;
        while (true) {
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coefficient *= Integer(read_digits());
            } else if (c == 'u' || c == 'v') {
                const std::size_t axis = read_variable();
                std::int64_t power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    get();
                    power = read_signed();
                }
                e[axis] += power;
            } else {
                break;
            }
            have_factor = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                get();
                continue;
            }
            break;
        }
        if (!have_factor) fail("expected a term");
        out.add_term(e, sign * coefficient);
    }

    std::size_t read_variable() {
        const std::size_t start = pos_;
        const char c = get();
        if (c == 'v') return dim_ - 1;
        if (dim_ == 2) {
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                const auto n = read_digits();
                if (n != "1") fail_at("unknown variable", start);
            }
            return 0;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail_at("expected u<i>", start);
        const auto digits = read_digits();
        std::size_t i = 0;
        std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (i < 1 || i + 1 > dim_) fail_at("variable index out of range", start);
        return i - 1;
    }

    std::int64_t read_signed() {
        skip_space();
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) negative = get() == '-';
        const auto digits = read_digits();
        std::int64_t v = 0;
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
        return negative ? -v : v;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) {
        const auto end = std::min(text_.size(), at + 8);
        throw ParseError(msg, std::string(text_.substr(std::min(at, text_.size()), end - std::min(at, text_.size()))), at);
    }

    std::string_view text_;
    std::size_t dim_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, std::size_t dimension) {
    return PolynomialParser(text, dimension).run();
}

}  // namespace vstring
