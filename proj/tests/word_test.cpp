#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "vstring/error.hpp"
#include "vstring/laurent.hpp"
#include "vstring/word.hpp"

using namespace vstring;

namespace {

Word w(std::string_view text) { return parse_word(text); }

const char* const kPhiAlpha1 = "A[-1,-2] A[-2,-1] a[-2,-2] a[-1,0] a[0,-1]";
const char* const kPhiAlpha2 = "a[0,1] a[1,0] a[2,2] A[2,1] A[1,2]";

}  // namespace

TEST(ExponentIndex, Arithmetic) {
    const ExponentIndex a{1, -2}, b{0, 3};
    EXPECT_EQ(a + b, (ExponentIndex{1, 1}));
    EXPECT_EQ(a - b, (ExponentIndex{1, -5}));
    EXPECT_EQ(-a, (ExponentIndex{-1, 2}));
    EXPECT_EQ(a.to_string(), "[1,-2]");
    EXPECT_LT(b, a);
}

TEST(Word, FormatAndParse) {
    EXPECT_EQ(format_word(Word{}), "1");
    EXPECT_EQ(format_word(w(kPhiAlpha1)), kPhiAlpha1);
    EXPECT_EQ(w("1"), Word{});
    EXPECT_EQ(w(""), Word{});
    EXPECT_THROW(w("a[1]"), Error);
    EXPECT_THROW(w("a[1,2"), ParseError);
    EXPECT_THROW(w("?[1,2]"), ParseError);
    EXPECT_EQ(w("x[1,2]").letters()[0].generator, 24);
}

TEST(Word, ConstructionReduces) {
    EXPECT_EQ(w("a[0,0] A[0,0]"), Word{});
    EXPECT_EQ(w("a[1,0] a[0,0] A[0,0] A[1,0] a[2,2]"), w("a[2,2]"));
    EXPECT_EQ(w("a[1,0] A[0,1]").length(), 2u);
}

TEST(Word, Shift) {
    EXPECT_EQ(shift(w("a[0,0]"), ExponentIndex{0, -1}), w("a[0,-1]"));
    const auto x = w(kPhiAlpha1);
    EXPECT_EQ(shift(x, ExponentIndex{0, 0}), x);
    EXPECT_EQ(shift(shift(x, ExponentIndex{2, -3}), ExponentIndex{-2, 3}), x);
    EXPECT_THROW(shift(x, ExponentIndex{1, 1, 1}), DimensionError);
}

TEST(Word, Multiply) {
    EXPECT_EQ(multiply(w("a[1,0]"), invert(w("a[1,0]"))), Word{});
    EXPECT_EQ(multiply(w(kPhiAlpha1), Word{}), w(kPhiAlpha1));
    EXPECT_EQ(multiply(w("a[0,2] A[1,1]"), w("a[1,1] a[3,3]")), w("a[0,2] a[3,3]"));
    EXPECT_THROW(multiply(Word(2), Word(3)), DimensionError);
}

TEST(Word, Invert) {
    EXPECT_EQ(invert(Word{}), Word{});
    EXPECT_EQ(invert(w("a[1,0] A[0,1]")), w("a[0,1] A[1,0]"));
    EXPECT_EQ(invert(invert(w(kPhiAlpha1))), w(kPhiAlpha1));
}

TEST(Word, StarWord) {
    EXPECT_EQ(star_word(w(kPhiAlpha1)), w(kPhiAlpha2));
    EXPECT_EQ(star_word(star_word(w(kPhiAlpha1))), w(kPhiAlpha1));
    EXPECT_EQ(star_word(w("a[0,0]")), w("a[0,0]"));
    EXPECT_THROW(star_word(Word(3)), DimensionError);
}

TEST(Word, Abelianize) {
    EXPECT_EQ(canonical_string(abelianize(w(kPhiAlpha2))), "u + v - u^2*v - u*v^2 + u^2*v^2");
    EXPECT_TRUE(abelianize(Word{}).is_zero());
}

TEST(Word, SubstituteByGenerator) {
    const std::vector<Word> images{w("a[0,0] a[1,1]")};
    EXPECT_EQ(substitute(w("A[1,0]"), images), w("A[2,1] A[1,0]"));
    const std::vector<Word> none;
    EXPECT_THROW(substitute(w("a[0,0]"), none), DimensionError);
}

TEST(WordProperties, FreeGroupLaws) {
    std::mt19937 rng(31);
    for (int i = 0; i < 1000; ++i) {
        // Unreduced letter lists reduce to the naive oracle's answer.
        std::vector<Letter> raw;
        oracle::Syms syms;
        std::uniform_int_distribution<int> n(0, 12), idx(-1, 1), coin(0, 1);
        for (int k = n(rng); k > 0; --k) {
            const Letter l{1, ExponentIndex{idx(rng), idx(rng)}, coin(rng) ? 1 : -1};
            raw.push_back(l);
            syms.emplace_back(l.sign, l.index[0], l.index[1]);
        }
        const Word x(2, raw);
        ASSERT_EQ(oracle::syms_of(x), oracle::reduce(syms));

        const auto y = oracle::word(rng, 8, 1), z = oracle::word(rng, 8, 1);
        const ExponentIndex d{idx(rng), idx(rng)};
        ASSERT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
        ASSERT_EQ(multiply(x, invert(x)), Word{});
        ASSERT_EQ(invert(multiply(x, y)), multiply(invert(y), invert(x)));
        ASSERT_EQ(shift(multiply(x, y), d), multiply(shift(x, d), shift(y, d)));
        ASSERT_EQ(star_word(multiply(x, y)), multiply(star_word(y), star_word(x)));
        ASSERT_EQ(abelianize(multiply(x, y)), abelianize(x) + abelianize(y));
        ASSERT_EQ(parse_word(format_word(x)), x);
        ASSERT_EQ(Word(2, std::vector<Letter>(x.letters().begin(), x.letters().end())), x);
    }
}
