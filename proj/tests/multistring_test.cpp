#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "vstring/error.hpp"
#include "vstring/invariant.hpp"
#include "vstring/multistring.hpp"

using namespace vstring;

namespace {

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ColoredGaussDiagram bare(std::vector<int> colors, std::vector<int> perm) {
    const int n = static_cast<int>(colors.size());
    return ColoredGaussDiagram(n, std::move(colors), std::move(perm), {});
}

GaussDiagram single_line(const ColoredGaussDiagram& d) {
    std::vector<Arrow> arrows;
    for (const auto& a : d.arrows()) arrows.push_back({a.tail.slot, a.head.slot});
    return GaussDiagram(std::move(arrows));
}

}  // namespace

TEST(ColoredDiagram, ParseFormatRoundTrip) {
    const std::string text = "n=2; colors=2,1; perm=2,1; L1.1 > L2.2, L2.1 > L1.2";
    const auto d = parse_colored_diagram(text);
    EXPECT_EQ(d.line_count(), 2);
    EXPECT_EQ(d.slot_count(1), 2);
    EXPECT_EQ(d.color_of(1), 2);
    EXPECT_EQ(format_colored_diagram(d), text);
    EXPECT_EQ(parse_colored_diagram(format_colored_diagram(d)), d);
    EXPECT_TRUE(looks_colored(text));
    EXPECT_FALSE(looks_colored("1>3,2>4"));
}

TEST(ColoredDiagram, TraversalFollowsColors) {
    const auto d = parse_colored_diagram("n=3; colors=3,1,2; perm=1,2,3; L1.1 > L2.1, L3.1 > L1.2, L2.2 > L3.2");
    EXPECT_EQ(d.traversal_order(), (std::vector<int>{2, 3, 1}));
    EXPECT_TRUE(d.before({2, 2}, {3, 1}));
    EXPECT_FALSE(d.before({1, 1}, {3, 2}));
}

TEST(ColoredDiagram, Validation) {
    EXPECT_THROW(parse_colored_diagram("n=2; colors=1,1; perm=1,2;"), Error);
    EXPECT_THROW(parse_colored_diagram("n=2; colors=1,2; perm=1,1;"), Error);
    EXPECT_THROW(parse_colored_diagram("n=2; colors=1,2; perm=1,2; L1.1 > L1.1"), Error);
    EXPECT_THROW(parse_colored_diagram("n=2; colors=1,2; perm=1,2; L1.1 > L3.1"), Error);
    EXPECT_THROW(parse_colored_diagram("n=2; colors=1,2; perm=1,2; L1.1 > L2.2"), Error);  // L2.1 missing
    EXPECT_THROW(parse_colored_diagram("n=2; colours=1,2; perm=1,2;"), ParseError);
}

TEST(PhiMulti, CrossingFreeIsIdentity) {
    const auto inv = phi_multi(bare({2, 3, 1}, {3, 1, 2}));
    EXPECT_EQ(inv.permutation, (std::vector<int>{3, 1, 2}));
    ASSERT_EQ(inv.words.size(), 3u);
    EXPECT_EQ(format_word(inv.words[0]), "b[0,0,0,0]");
    EXPECT_EQ(format_word(inv.words[1]), "c[0,0,0,0]");
    EXPECT_EQ(format_word(inv.words[2]), "a[0,0,0,0]");
}

TEST(PhiMulti, SingleCrossingBetweenLines) {
    // Positive crossing, line 1 over: its word steps by v^-1; line 2 picks up
    // the conjugate b^(u1^-1) by a^(u2 v)-shifted copies of a.
    const auto inv = phi_multi(parse_colored_diagram("n=2; colors=1,2; perm=1,2; L1.1 > L2.1"));
    EXPECT_EQ(format_word(inv.words[0]), "a[0,0,-1]");
    EXPECT_EQ(format_word(inv.words[1]), "A[0,-1,-1] b[-1,0,0] a[0,0,0]");
}

TEST(PhiMulti, SpecializesToPhi) {
    const auto alpha1 = parse_diagram("1>3,2>4");
    EXPECT_EQ(phi_multi(as_colored(alpha1)).words.at(0), phi(alpha1).word);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto d = random_colored_diagram(1, static_cast<int>(seed % 7), seed);
        ASSERT_EQ(phi_multi(d).words.at(0), phi(single_line(d)).word) << format_colored_diagram(d);
    }
}

TEST(ComposeMulti, IdentityOnTheRight) {
    const auto d = parse_colored_diagram("n=2; colors=2,1; perm=2,1; L1.1 > L2.2, L2.1 > L1.2");
    const auto inv = phi_multi(d);
    // d's line of color 2 arrives at height 2, color 1 at height 1.
    EXPECT_EQ(compose_multi(inv, phi_multi(bare({1, 2}, {1, 2}))), inv);
}

TEST(ComposeMulti, NamesTheMismatchedHeight) {
    const auto a = phi_multi(bare({1, 2, 3}, {1, 2, 3}));
    const auto b = phi_multi(bare({1, 3, 2}, {1, 2, 3}));
    try {
        compose_multi(a, b);
        FAIL() << "expected a color mismatch";
    } catch (const ValidationError& e) {
        EXPECT_STREQ(e.what(), "color mismatch at height 2");
    }
    EXPECT_THROW(concat(bare({1, 2, 3}, {1, 2, 3}), bare({1, 3, 2}, {1, 2, 3})), ValidationError);
}

TEST(ComposeMulti, ExplicitColorsOverload) {
    const auto a = phi_multi(bare({1, 2}, {2, 1}));
    const auto b = phi_multi(bare({1, 2}, {1, 2}));
    const std::vector<int> c1{1, 2}, ok{2, 1}, bad{1, 2};
    EXPECT_NO_THROW(compose_multi(a, b, c1, ok));
    EXPECT_THROW(compose_multi(a, b, c1, bad), ValidationError);
}

TEST(ComposeMulti, RejectsExactlyMismatchedColorsAndComposesPermutations) {
    for (int n : {2, 3}) {
        const auto perms = permutations(n);
        for (const auto& colors1 : perms) {
            for (const auto& perm1 : perms) {
                for (const auto& colors2 : perms) {
                    for (const auto& perm2 : perms) {
                        const auto a = phi_multi(bare(colors1, perm1));
                        const auto b = phi_multi(bare(colors2, perm2));
                        bool match = true;
                        for (int j = 0; j < n; ++j) match = match && colors1[j] == colors2[perm1[j] - 1];
                        if (!match) {
                            ASSERT_THROW(compose_multi(a, b), ValidationError);
                            continue;
                        }
                        const auto c = compose_multi(a, b);
                        for (int j = 0; j < n; ++j) ASSERT_EQ(c.permutation[j], perm2[perm1[j] - 1]);
                        ASSERT_EQ(c.colors, colors1);
                    }
                }
            }
        }
    }
}

TEST(ComposeMulti, ThreeLineHandExample) {
    // Line 1 crosses over line 3, then the lines cycle.
    const auto d1 = parse_colored_diagram("n=3; colors=1,2,3; perm=2,3,1; L1.1 > L3.1");
    // Arriving colors by height: height 1 <- line 3 (color 3), 2 <- line 1, 3 <- line 2.
    const auto d2 = parse_colored_diagram("n=3; colors=3,1,2; perm=3,1,2; L2.1 > L3.1");
    const auto product = concat(d1, d2);
    EXPECT_EQ(product.permutation()[0], 1);
    EXPECT_EQ(product.permutation()[1], 2);
    EXPECT_EQ(product.permutation()[2], 3);
    EXPECT_EQ(phi_multi(product), compose_multi(phi_multi(d1), phi_multi(d2)));
}

TEST(MultiProperties, HomomorphismAndMoves) {
    std::mt19937_64 rng(88);
    for (int i = 0; i < 150; ++i) {
        const int n = static_cast<int>(rng() % 3) + 1;
        const auto d1 = random_colored_diagram(n, static_cast<int>(rng() % 5), rng());
        auto d2 = random_colored_diagram(n, static_cast<int>(rng() % 5), rng());
        // Recolor d2 so the product is defined.
        std::vector<int> colors(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) colors[d1.permutation()[j - 1] - 1] = d1.color_of(j);
        std::vector<ColoredArrow> arrows(d2.arrows().begin(), d2.arrows().end());
        d2 = ColoredGaussDiagram(n, colors, std::vector<int>(d2.permutation().begin(), d2.permutation().end()), arrows);
        ASSERT_EQ(phi_multi(concat(d1, d2)), compose_multi(phi_multi(d1), phi_multi(d2)));

        const auto base = phi_multi(d1);
        auto moves = enumerate_colored_moves(d1);
        const auto ins = enumerate_colored_insertions(d1);
        moves.insert(moves.end(), ins.begin(), ins.end());
        for (const auto& mv : moves) {
            const auto e = apply_colored_move(d1, mv);
            ASSERT_EQ(phi_multi(e), base) << format_colored_diagram(d1);
            ASSERT_EQ(apply_colored_move(e, inverse_colored_move(d1, mv)), d1) << format_colored_diagram(d1);
        }
    }
}

TEST(MultiProperties, H1StaysOnOneLine) {
    const auto d = ColoredGaussDiagram::trivial(2);
    for (const auto& mv : enumerate_colored_insertions(d)) {
        if (mv.kind != MoveKind::H1) continue;
        const auto e = apply_colored_move(d, mv);
        ASSERT_EQ(e.arrows().size(), 1u);
        EXPECT_EQ(e.arrows()[0].tail.line, e.arrows()[0].head.line);
    }
}
