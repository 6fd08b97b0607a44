#include "vstring/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "vstring/error.hpp"
#include "vstring/laurent.hpp"

namespace vstring {

namespace {

void require_dim(std::size_t expected, std::size_t got) {
    if (expected != got) {
        throw DimensionError("index dimension mismatch: expected " + std::to_string(expected) + ", got " +
                             std::to_string(got));
    }
}

}  // namespace

Word::Word(std::size_t dimension, std::vector<Letter> letters) : dim_(dimension) {
    letters_.reserve(letters.size());
    for (auto& l : letters) push_back(l);
}

Word Word::generator(ExponentIndex index, int generator) {
    Word w(index.size());
    w.letters_.push_back(Letter{generator, std::move(index), 1});
    return w;
}

void Word::push_back(const Letter& l) {
    require_dim(dim_, l.index.size());
    if (l.sign != 1 && l.sign != -1) throw DimensionError("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().cancels(l)) {
        letters_.pop_back();
    } else {
        letters_.push_back(l);
    }
}

void Word::append(const Word& w) {
    require_dim(dim_, w.dim_);
    // Cancel across the junction, then copy the remainder in bulk.
    std::size_t i = 0;
    while (i < w.letters_.size() && !letters_.empty() && letters_.back().cancels(w.letters_[i])) {
        letters_.pop_back();
        ++i;
    }
    letters_.insert(letters_.end(), w.letters_.begin() + static_cast<std::ptrdiff_t>(i), w.letters_.end());
}

std::size_t Word::hash() const noexcept {
    std::size_t h = dim_;
    for (const auto& l : letters_) {
        h = h * 31 + l.index.hash();
        h = h * 31 + static_cast<std::size_t>(l.generator * 2 + (l.sign > 0 ? 1 : 0));
    }
    return h;
}

Word shift(const Word& w, const ExponentIndex& delta) {
    require_dim(w.dimension(), delta.size());
    Word out(w.dimension());
    // A translate of a reduced word is reduced; push_back never cancels here.
    for (Letter l : w.letters()) {
        l.index += delta;
        out.push_back(l);
    }
    return out;
}

Word multiply(const Word& w1, const Word& w2) {
    Word out = w1;
    out.append(w2);
    return out;
}

Word invert(const Word& w) {
    Word out(w.dimension());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word star_word(const Word& w) {
    if (w.dimension() != 2) throw DimensionError("star_word is defined for two-variable indices only");
    Word out(2);
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        out.push_back(Letter{it->generator, -it->index, it->sign});
    }
    return out;
}

Word substitute(const Word& w, std::span<const Word> images) {
    std::size_t dim = w.dimension();
    for (const auto& img : images) require_dim(dim, img.dimension());
    Word out(dim);
    for (const Letter& l : w.letters()) {
        if (l.generator < 1 || static_cast<std::size_t>(l.generator) > images.size()) {
            throw DimensionError("no image for generator " + std::to_string(l.generator));
        }
        const Word piece = shift(images[l.generator - 1], l.index);
        out.append(l.sign > 0 ? piece : invert(piece));
    }
    return out;
}

LaurentPolynomial abelianize(const Word& w) {
    LaurentPolynomial p(w.dimension());
    for (const Letter& l : w.letters()) p.add_term(l.index, l.sign);
    return p;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out.push_back(' ');
        const char base = static_cast<char>((l.sign > 0 ? 'a' : 'A') + (l.generator - 1));
        out.push_back(base);
        out += l.index.to_string();
    }
    return out;
}

Word parse_word(std::string_view text, std::size_t dimension) {
    Word out(dimension);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip();
        if (i != text.size()) throw ParseError("trailing input after identity word", std::string(text.substr(i)), i);
        return out;
    }
    while (i < text.size()) {
        const std::size_t start = i;
        const char c = text[i++];
        Letter l;
        if (c >= 'a' && c <= 'z') {
            l.generator = c - 'a' + 1;
            l.sign = 1;
        } else if (c >= 'A' && c <= 'Z') {
            l.generator = c - 'A' + 1;
            l.sign = -1;
        } else {
            throw ParseError("expected a letter", std::string(1, c), start);
        }
        const auto close = text.find(']', i);
        if (i >= text.size() || text[i] != '[' || close == std::string_view::npos) {
            throw ParseError("expected [..] index", std::string(text.substr(start, 8)), start);
        }
        std::string_view body = text.substr(i + 1, close - i - 1);
        l.index = ExponentIndex::zero(0);
        std::vector<std::int64_t> entries;
        std::size_t k = 0;
        while (k <= body.size()) {
            const auto comma = std::min(body.find(',', k), body.size());
            std::string_view part = body.substr(k, comma - k);
            while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
            while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
            if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
                throw ParseError("malformed index entry", std::string(part), start);
            }
            entries.push_back(v);
            k = comma + 1;
        }
        if (entries.size() != dimension) {
            throw ParseError("index has " + std::to_string(entries.size()) + " entries, expected " +
                                 std::to_string(dimension),
                             std::string(text.substr(start, close + 1 - start)), start);
        }
        l.index = ExponentIndex::zero(dimension);
        for (std::size_t e = 0; e < dimension; ++e) l.index[e] = entries[e];
        out.push_back(l);
        i = close + 1;
        skip();
    }
    return out;
}

}  // namespace vstring
