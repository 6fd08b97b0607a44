#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "vstring/error.hpp"
#include "vstring/laurent.hpp"

using namespace vstring;

namespace {

LaurentPolynomial P(std::string_view text) { return parse_polynomial(text); }

const oracle::Rational kU(3, 2), kV(-5, 7);

}  // namespace

TEST(Laurent, PathProduct) { EXPECT_EQ(mul(P("1 - u*v"), P("v^-1")), P("v^-1 - u")); }

TEST(Laurent, RingIdentities) {
    const auto p = P("-u*v^3 - u^3*v^2 + u^3*v^3 + u + v^2");
    EXPECT_TRUE(add(p, neg(p)).is_zero());
    EXPECT_EQ(mul(p, LaurentPolynomial::constant(2, 1)), p);
    EXPECT_TRUE(mul(p, LaurentPolynomial(2)).is_zero());
    EXPECT_EQ(p.coefficient(ExponentIndex{3, 2}), -1);
    EXPECT_EQ(p.coefficient(ExponentIndex{9, 9}), 0);
}

TEST(Laurent, SwapUV) {
    const auto sym = P("v + u + u^2*v^2 - u^2*v - u*v^2");
    EXPECT_EQ(swap_uv(sym), sym);
    const auto asym = P("-u*v^3 - u^3*v^2 + u^3*v^3 + u + v^2");
    EXPECT_EQ(swap_uv(asym), P("-u^3*v - u^2*v^3 + u^3*v^3 + v + u^2"));
    EXPECT_NE(swap_uv(asym), asym);
    EXPECT_THROW(swap_uv(LaurentPolynomial(3)), DimensionError);
}

TEST(Laurent, UnitEvaluations) {
    const MonomialImage at_one[] = {{1, {0, 0}}, {1, {0, 0}}};
    const MonomialImage inverse_pair[] = {{1, {1, 0}}, {1, {-1, 0}}};
    const auto one = LaurentPolynomial::constant(2, 1);
    const auto phi2 = P("u + v - u^2*v - u*v^2 + u^2*v^2");
    EXPECT_EQ(eval_monomial_map(phi2, at_one), one);
    EXPECT_EQ(eval_monomial_map(phi2, inverse_pair), one);
    const auto phi1 = P("-u^-1*v^-2 - u^-2*v^-1 + u^-2*v^-2 + u^-1 + v^-1");
    EXPECT_EQ(eval_monomial_map(phi1, at_one), one);
    const MonomialImage too_few[] = {{1, {0, 0}}};
    EXPECT_THROW(eval_monomial_map(phi1, too_few), DimensionError);
}

TEST(Laurent, CanonicalString) {
    EXPECT_EQ(canonical_string(LaurentPolynomial(2)), "0");
    EXPECT_EQ(canonical_string(LaurentPolynomial::constant(2, 1)), "1");
    EXPECT_EQ(canonical_string(P("u^2*v^2 - u*v^2 - u^2*v + v + u")), "u + v - u^2*v - u*v^2 + u^2*v^2");
    EXPECT_EQ(canonical_string(P("2*u*v - 3")), "-3 + 2*u*v");
    EXPECT_EQ(canonical_string(LaurentPolynomial::monomial(ExponentIndex{1, 0, 2}, 4)), "4*u1*v^2");
}

TEST(Laurent, ParseRejectsJunk) {
    EXPECT_THROW(P("u +"), ParseError);
    EXPECT_THROW(P("w"), ParseError);
    EXPECT_THROW(P("u^"), ParseError);
}

TEST(Laurent, DimensionMismatch) { EXPECT_THROW(add(LaurentPolynomial(2), LaurentPolynomial(3)), DimensionError); }

TEST(Laurent, BigCoefficientsDoNotOverflow) {
    auto p = P("1 + u");
    auto q = LaurentPolynomial::constant(2, 1);
    for (int i = 0; i < 80; ++i) q = q * p;
    // binomial(80, 40) exceeds 64 bits
    EXPECT_EQ(q.coefficient(ExponentIndex{40, 0}).str(), "107507208733336176461620");
}

TEST(LaurentProperties, RingAxiomsAgainstExactEvaluation) {
    std::mt19937 rng(404);
    for (int i = 0; i < 500; ++i) {
        const auto a = oracle::polynomial(rng), b = oracle::polynomial(rng), c = oracle::polynomial(rng);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(oracle::evaluate(a * b, kU, kV), oracle::evaluate(a, kU, kV) * oracle::evaluate(b, kU, kV));
        ASSERT_EQ(oracle::evaluate(a + b, kU, kV), oracle::evaluate(a, kU, kV) + oracle::evaluate(b, kU, kV));
        ASSERT_EQ(swap_uv(swap_uv(a)), a);
        ASSERT_EQ(swap_uv(a * b), swap_uv(a) * swap_uv(b));
        ASSERT_EQ(oracle::evaluate(swap_uv(a), kU, kV), oracle::evaluate(a, kV, kU));
        const MonomialImage images[] = {{-1, {1, 2}}, {1, {0, -1}}};
        ASSERT_EQ(eval_monomial_map(a * b, images), eval_monomial_map(a, images) * eval_monomial_map(b, images));
        ASSERT_EQ(eval_monomial_map(a + b, images), eval_monomial_map(a, images) + eval_monomial_map(b, images));
        ASSERT_EQ(parse_polynomial(canonical_string(a)), a);
    }
}
