#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vstring/exponent_index.hpp"

namespace vstring {

class LaurentPolynomial;

// A generator a_n or its inverse. `generator` is 1 for the single family
// of an open string and the color c (family a, b, c, ...) for n-strings.
struct Letter {
    int generator = 1;
    ExponentIndex index;
    int sign = 1;

    Letter inverse() const { return Letter{generator, index, -sign}; }
    bool cancels(const Letter& o) const { return generator == o.generator && sign == -o.sign && index == o.index; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group on the a_n. The reduced form is
// unique, so == compares elements of the group.
class Word {
public:
    explicit Word(std::size_t dimension = 2) : dim_(dimension) {}
    // Reduces the letters; throws DimensionError on mixed index sizes.
    Word(std::size_t dimension, std::vector<Letter> letters);

    static Word generator(ExponentIndex index, int generator = 1);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::span<const Letter> letters() const noexcept { return letters_; }

    // Append with cancellation at the junction.
    void push_back(const Letter& l);
    void append(const Word& w);

    friend bool operator==(const Word&, const Word&) = default;

    std::size_t hash() const noexcept;

private:
    std::size_t dim_;
    std::vector<Letter> letters_;
};

// Translate every index by delta (the Z^d action).
Word shift(const Word& w, const ExponentIndex& delta);
Word multiply(const Word& w1, const Word& w2);
Word invert(const Word& w);

// Reverse the letters and negate every index, keeping signs. Single strings only.
Word star_word(const Word& w);

// Replace each letter g_delta^{+-1} by shift(images[g-1], delta)^{+-1}.
Word substitute(const Word& w, std::span<const Word> images);

// Exponent sum: sum of sign * u^index. A homomorphism to the additive group.
LaurentPolynomial abelianize(const Word& w);

// Letters `a[j,k]` / `A[j,k]` (b/B, c/C, ... for later generators),
// space separated; the empty word is `1`.
std::string format_word(const Word& w);
Word parse_word(std::string_view text, std::size_t dimension = 2);

}  // namespace vstring
