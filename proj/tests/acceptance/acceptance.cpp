// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vstring/error.hpp"
#include "vstring/gauss_diagram.hpp"
#include "vstring/invariant.hpp"
#include "vstring/moves.hpp"
#include "vstring/multistring.hpp"
#include "vstring/verify.hpp"

using namespace vstring;

namespace {

const GaussDiagram kAlpha1 = parse_diagram("1>3,2>4");
const GaussDiagram kAlpha2 = parse_diagram("3>1,4>2");
const GaussDiagram kAlpha3 = parse_diagram("3>1,5>2,6>4");
const GaussDiagram kFivePaths = parse_diagram("3>1,5>2,4>6");
const GaussDiagram kSquareBase = parse_diagram("5>1,4>2,6>3");

LaurentPolynomial P(std::string_view text) { return parse_polynomial(text); }

const LaurentPolynomial& one() {
    static const auto p = LaurentPolynomial::constant(2, 1);
    return p;
}

bool unit_evaluations_hold(const LaurentPolynomial& p) {
    const MonomialImage at_one[] = {{1, {0, 0}}, {1, {0, 0}}};
    const MonomialImage inverse_pair[] = {{1, {1, 0}}, {1, {-1, 0}}};
    return eval_monomial_map(p, at_one) == one() && eval_monomial_map(p, inverse_pair) == one();
}

// Collects the reasons a criterion failed; empty means pass.
struct Check {
    std::vector<std::string> problems;
    void expect(bool ok, std::string what) {
        if (!ok) problems.push_back(std::move(what));
    }
};

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void golden_words(Check& c) {
    c.expect(format_word(phi(kAlpha1).word) == "A[-1,-2] A[-2,-1] a[-2,-2] a[-1,0] a[0,-1]", "phi(1>3,2>4)");
    c.expect(format_word(phi(kAlpha2).word) == "a[0,1] a[1,0] a[2,2] A[2,1] A[1,2]", "phi(3>1,4>2)");
}

void non_commutativity(Check& c) {
    const auto a1 = phi(kAlpha1), a2 = phi(kAlpha2);
    const auto forward = compose(a1, a2), backward = compose(a2, a1);
    c.expect(forward != backward, "products commute");
    c.expect(forward == phi(concat(kAlpha1, kAlpha2)), "compose(a1,a2) differs from the direct sweep");
    c.expect(backward == phi(concat(kAlpha2, kAlpha1)), "compose(a2,a1) differs from the direct sweep");
}

void golden_polynomial(Check& c) {
    const auto p = phi_poly(kAlpha2);
    c.expect(abelianize(phi(kAlpha2).word) == p, "abelianized word differs from phi_poly");
    c.expect(canonical_string(p) == "u + v - u^2*v - u*v^2 + u^2*v^2", "polynomial is " + canonical_string(p));
    c.expect(swap_uv(p) == p, "polynomial is not swap-symmetric");
}

void star_compatibility(Check& c) {
    c.expect(star_word(phi(kAlpha1).word) == phi(star(kAlpha1)).word, "fails on 1>3,2>4");
    const auto report = run_verification({1000, 6, 7, 0});
    for (const auto& t : report.tallies) {
        if (t.name == "star-compatibility") c.expect(t.failed == 0, std::to_string(t.failed) + " random failures");
    }
}

void five_paths(Check& c) {
    const auto paths = enumerate_weighted_paths(kFivePaths);
    c.expect(paths.size() == 5, std::to_string(paths.size()) + " paths");
    std::multiset<std::string> got, printed;
    for (const auto& path : paths) got.insert(canonical_string(path.product()));
    const std::vector<std::vector<const char*>> factors = {
        {"v", "v", "u", "v^-1", "u", "u^-1"},
        {"1 - u*v", "v^-1", "u", "u^-1"},
        {"v", "1 - u*v", "u^-1"},
        {"v", "v", "u", "1 - u^-1*v^-1"},
        {"1 - u*v", "1 - u^-1*v^-1"},
    };
    for (const auto& path : factors) {
        auto product = one();
        for (const char* f : path) product = product * P(f);
        printed.insert(canonical_string(product));
    }
    c.expect(got == printed, "path products differ from the printed ones");
    const auto p = phi_poly(kFivePaths);
    c.expect(p == abelianize(phi(kFivePaths).word), "phi_poly differs from the abelianized word");
    c.expect(p != swap_uv(p), "polynomial is symmetric");
    c.expect(ribbon_obstruction_abelian(kFivePaths).certifies_not_ribbon(), "ribbon does not report not-ribbon");
    c.expect(unit_evaluations_hold(p), "recomputed total fails the unit evaluations");
    c.expect(!unit_evaluations_hold(P("u*v^2 - v^2 - u - v + u^-1*v - v^-1")), "printed total passes unexpectedly");
    c.expect(p != P("u*v^2 - v^2 - u - v + u^-1*v - v^-1"), "printed total reproduced");
}

void transcribed_diagrams(Check& c) {
    c.expect(format_word(phi(kAlpha3).word) == "a[0,0] a[1,2] a[2,1] a[3,3] A[3,2] A[2,3] A[1,1]", "seven-letter word");
    c.expect(!commute_check(kAlpha2, kAlpha3).commute, "alpha2 and alpha3 commute");
    const auto p = phi_poly(kSquareBase);
    c.expect(p == P("-u*v^3 - u^3*v^2 + u^3*v^3 + u + v^2"), "polynomial is " + canonical_string(p));
    const MonomialImage inverse[] = {{1, {-1, 0}}, {1, {0, -1}}};
    const auto q = phi_poly(concat(kSquareBase, star(kSquareBase)));
    c.expect(q == p * eval_monomial_map(p, inverse), "phi(a.a*) is not phi(u,v)phi(1/u,1/v)");
    c.expect(q != swap_uv(q), "phi(a.a*) is symmetric");
}

void property_suite(Check& c) {
    const auto report = run_verification({1000, 6, 7, 0});
    const std::vector<std::pair<std::string, std::string>> parts = {
        {"a", "move-invariance"},     {"b", "homomorphism"},       {"c", "dual-algorithm"},
        {"d", "hat-swap"},            {"e", "normal-form"},        {"e", "normal-form-writhe"},
        {"f", "unit-evaluations"},    {"g", "ribbon-presentations"},
    };
    for (const auto& [label, name] : parts) {
        for (const auto& t : report.tallies) {
            if (t.name != name) continue;
            std::cout << "      (" << label << ") " << name << ": " << t.failed << "/" << t.checked << " failed\n";
            c.expect(t.failed == 0, "(" + label + ") " + name + " failed " + std::to_string(t.failed) + " times");
        }
    }
    for (const auto& f : report.failures) {
        if (f.property == "normal-form-writhe") {
            std::cout << "      first reproducer: verify --count 1 --seed " << f.seed << "  (" << f.diagram << ": "
                      << f.detail << ")\n";
            break;
        }
    }
}

// Greedy deletion down to nothing, if the engine can get there.
bool reduces_to_empty(GaussDiagram d) {
    for (int guard = 0; guard < 64 && !d.empty(); ++guard) {
        const auto set = enumerate_moves(d);
        const auto del = std::find_if(set.moves.begin(), set.moves.end(),
                                      [](const HomotopyMove& mv) { return mv.direction == MoveDirection::Delete; });
        if (del == set.moves.end()) return false;
        d = apply_move(d, *del);
    }
    return d.empty();
}

void trivial_cases(Check& c) {
    for (const char* code : {"1>2", "1>3,4>2", "1>4,3>2", ""}) {
        c.expect(phi(parse_diagram(code)) == StringInvariant::identity(), std::string("phi(\"") + code + "\")");
    }
    int reduced = 0;
    for (int m = 0; m <= 4; ++m) {
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            const auto d = random_diagram(m, seed);
            if (!reduces_to_empty(d)) continue;
            ++reduced;
            c.expect(phi(d) == StringInvariant::identity(), "phi(\"" + format_diagram(d) + "\")");
        }
    }
    // Strings grown from nothing by insertions always reduce.
    GaussDiagram grown;
    for (int step = 0; step < 4; ++step) {
        const auto ins = enumerate_moves(grown).insertions.all();
        grown = apply_move(grown, ins[(ins.size() * 7 + 3 * static_cast<std::size_t>(step)) / 11]);
    }
    c.expect(phi(grown) == StringInvariant::identity(), "phi(\"" + format_diagram(grown) + "\")");
    c.expect(reduced > 0, "no random diagram reduced to empty");
}

void multistring_specialization(Check& c) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto d = random_colored_diagram(1, static_cast<int>(seed % 7), seed + 1000);
        std::vector<Arrow> arrows;
        for (const auto& a : d.arrows()) arrows.push_back({a.tail.slot, a.head.slot});
        if (phi_multi(d).words.at(0) != phi(GaussDiagram(arrows)).word) {
            c.expect(false, "phi_multi differs from phi on " + format_colored_diagram(d));
        }
    }
    for (int n : {2, 3}) {
        const auto perms = permutations(n);
        for (const auto& colors1 : perms) {
            for (const auto& perm1 : perms) {
                for (const auto& colors2 : perms) {
                    const auto a = phi_multi(ColoredGaussDiagram(n, colors1, perm1, {}));
                    const auto b = phi_multi(ColoredGaussDiagram(n, colors2, perms.back(), {}));
                    bool match = true;
                    for (int j = 0; j < n; ++j) match = match && colors1[j] == colors2[perm1[j] - 1];
                    bool rejected = false;
                    try {
                        compose_multi(a, b);
                    } catch (const ValidationError&) {
                        rejected = true;
                    }
                    if (rejected == match) c.expect(false, "color check wrong for n=" + std::to_string(n));
                }
            }
        }
    }
    // Hand-built: a swap of two lines composed with itself is the identity.
    const auto swap2 = parse_colored_diagram("n=2; colors=1,2; perm=2,1; L1.1 > L2.1");
    const auto back2 = parse_colored_diagram("n=2; colors=2,1; perm=2,1; L2.1 > L1.1");
    const auto c2 = compose_multi(phi_multi(swap2), phi_multi(back2));
    c.expect(c2.permutation == std::vector<int>{1, 2}, "2-line permutation");
    c.expect(c2 == phi_multi(concat(swap2, back2)), "2-line product differs from the direct sweep");
    // Hand-built: two 3-cycles compose to the identity.
    const auto cyc = parse_colored_diagram("n=3; colors=1,2,3; perm=2,3,1; L1.1 > L3.1");
    const auto next = parse_colored_diagram("n=3; colors=3,1,2; perm=3,1,2; L2.1 > L3.1");
    const auto c3 = compose_multi(phi_multi(cyc), phi_multi(next));
    c.expect(c3.permutation == std::vector<int>{1, 2, 3}, "3-line permutation");
    c.expect(c3 == phi_multi(concat(cyc, next)), "3-line product differs from the direct sweep");
    const auto other = parse_colored_diagram("n=3; colors=1,2,3; perm=1,2,3;");
    bool named = false;
    try {
        compose_multi(phi_multi(cyc), phi_multi(other));
    } catch (const ValidationError& e) {
        named = std::string(e.what()) == "color mismatch at height 1";
    }
    c.expect(named, "3-line mismatch not reported at height 1");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"golden words", golden_words},
        {"non-commutativity", non_commutativity},
        {"golden polynomial", golden_polynomial},
        {"star compatibility", star_compatibility},
        {"five weighted paths", five_paths},
        {"transcribed diagrams", transcribed_diagrams},
        {"property suite (verify --count 1000 --max-arrows 6 --seed 7)", property_suite},
        {"trivial-case oracle", trivial_cases},
        {"multistring specialization", multistring_specialization},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.problems.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << '\n';
        for (const auto& p : c.problems) std::cout << "      " << p << '\n';
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
