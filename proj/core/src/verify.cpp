#include "vstring/verify.hpp"

#include <functional>
#include <random>

#include <nlohmann/json.hpp>

#include "parallel.hpp"
#include "random_util.hpp"
#include "vstring/gauss_diagram.hpp"
#include "vstring/invariant.hpp"
#include "vstring/moves.hpp"
#include "vstring/multistring.hpp"

namespace vstring {

namespace {

enum Property : std::size_t {
    kMoveInvariance,
    kHomomorphism,
    kDualAlgorithm,
    kHatSwap,
    kNormalForm,
    kNormalFormWrithe,
    kUnitEvaluations,
    kRibbonPresentations,
    kStarCompatibility,
    kMultiSpecialization,
    kMultiHomomorphism,
    kMultiMoveInvariance,
    kPropertyCount
};

struct ItemResult {
    std::vector<PropertyFailure> failures;
    std::vector<bool> failed = std::vector<bool>(kPropertyCount, false);
};

const LaurentPolynomial& one() {
    static const LaurentPolynomial p = LaurentPolynomial::constant(2, 1);
    return p;
}

LaurentPolynomial at_unit(const LaurentPolynomial& p) {
    const MonomialImage images[] = {{1, {0, 0}}, {1, {0, 0}}};
    return eval_monomial_map(p, images);
}

LaurentPolynomial at_inverse_pair(const LaurentPolynomial& p) {
    const MonomialImage images[] = {{1, {1, 0}}, {1, {-1, 0}}};
    return eval_monomial_map(p, images);
}

std::string describe(const ColoredMove& mv) {
    std::string out = to_string(mv.kind) + " " + to_string(mv.direction);
    for (const auto& e : mv.sites) out += " L" + std::to_string(e.line) + "." + std::to_string(e.slot);
    return out;
}

class ItemChecker {
public:
    ItemChecker(std::size_t item, std::uint64_t seed, ItemResult& result) : item_(item), seed_(seed), result_(result) {}

    // Runs `check`; a false return or an exception records a failure.
    void run(Property p, const std::string& diagram, const std::function<std::string()>& check) {
        std::string detail;
        try {
            detail = check();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) return;
        result_.failed[p] = true;
        result_.failures.push_back({verification_properties()[p], item_, seed_, diagram, detail});
    }

private:
    std::size_t item_;
    std::uint64_t seed_;
    ItemResult& result_;
};

void check_single(const GaussDiagram& d, const GaussDiagram& other, ItemChecker& c) {
    const std::string code = format_diagram(d);
    const StringInvariant inv = phi(d);
    const LaurentPolynomial poly = phi_poly(d);

    c.run(kMoveInvariance, code, [&]() -> std::string {
        const MoveSet set = enumerate_moves(d);
        std::vector<HomotopyMove> moves = set.moves;
        const auto inserts = set.insertions.all();
        moves.insert(moves.end(), inserts.begin(), inserts.end());
        for (const auto& mv : moves) {
            const GaussDiagram moved = apply_move(d, mv);
            if (phi(moved) != inv) return "Phi changed under " + describe(mv) + " -> " + format_diagram(moved);
            if (apply_move(moved, inverse_move(d, mv)) != d) return "could not undo " + describe(mv);
        }
        return {};
    });

    c.run(kHomomorphism, code + " | " + format_diagram(other), [&]() -> std::string {
        if (phi(concat(d, other)) != compose(inv, phi(other))) return "phi(d1.d2) != compose(phi(d1), phi(d2))";
        return {};
    });

    c.run(kDualAlgorithm, code, [&]() -> std::string {
        if (abelianize(inv.word) != poly) {
            return "abelianize(phi) = " + canonical_string(abelianize(inv.word)) + " but phi_poly = " + canonical_string(poly);
        }
        return {};
    });

    c.run(kHatSwap, code, [&]() -> std::string {
        if (phi_poly(hat(d)) != swap_uv(poly)) return "phi_poly(hat d) != swap_uv(phi_poly d)";
        return {};
    });

    c.run(kNormalForm, code, [&]() -> std::string {
        normal_form(inv);
        return {};
    });

    // The exponent of the middle letter against the signed arrow count of d
    // itself. Kinks make these differ: {(1,2)} has trivial Phi but writhe 1.
    c.run(kNormalFormWrithe, code, [&]() -> std::string {
        const NormalForm nf = normal_form(inv);
        if (nf.writhe != writhe(d)) {
            return "normal form writhe " + std::to_string(nf.writhe) + " != writhe " + std::to_string(writhe(d));
        }
        return {};
    });

    c.run(kUnitEvaluations, code, [&]() -> std::string {
        if (at_unit(poly) != one()) return "phi(1,1) = " + canonical_string(at_unit(poly));
        if (at_inverse_pair(poly) != one()) return "phi(u,1/u) = " + canonical_string(at_inverse_pair(poly));
        return {};
    });

    // d . hat(d) is always a ribbon presentation; d itself occasionally is.
    const GaussDiagram symmetric = concat(d, hat(d));
    c.run(kRibbonPresentations, format_diagram(symmetric), [&]() -> std::string {
        for (const GaussDiagram* x : {&d, &symmetric}) {
            if (!is_ribbon_presentation(*x)) continue;
            if (!ribbon_obstruction_abelian(*x).obstruction_passed) return "abelian obstruction rejects " + format_diagram(*x);
            if (!ribbon_obstruction_full(*x).obstruction_passed) return "full obstruction rejects " + format_diagram(*x);
        }
        if (!is_ribbon_presentation(symmetric)) return "d.hat(d) is not a ribbon presentation";
        return {};
    });

    c.run(kStarCompatibility, code, [&]() -> std::string {
        if (phi(star(d)).word != star_word(inv.word)) return "phi(star d) != star_word(phi d)";
        return {};
    });

    c.run(kMultiSpecialization, code, [&]() -> std::string {
        const MultiInvariant m = phi_multi(as_colored(d));
        if (m.words.size() != 1 || m.words[0] != inv.word) return "phi_multi on one line disagrees with phi";
        const MultiInvariant composed = compose_multi(m, phi_multi(as_colored(other)));
        if (composed.words[0] != compose(inv, phi(other)).word) return "compose_multi on one line disagrees with compose";
        return {};
    });
}

void check_multi(std::mt19937_64& rng, int max_arrows, ItemChecker& c) {
    const int n = 1 + static_cast<int>(detail::draw_below(rng, 3));
    const auto arrows = [&] { return static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(max_arrows) + 1)); };
    const ColoredGaussDiagram d1 = random_colored_diagram(n, arrows(), rng());
    const ColoredGaussDiagram raw2 = random_colored_diagram(n, arrows(), rng());
    // Recolor the second factor so that the product is defined.
    std::vector<int> colors2(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) colors2[d1.permutation()[j - 1] - 1] = d1.color_of(j);
    const ColoredGaussDiagram d2(n, colors2, std::vector<int>(raw2.permutation().begin(), raw2.permutation().end()),
                                 std::vector<ColoredArrow>(raw2.arrows().begin(), raw2.arrows().end()));
    const std::string code = format_colored_diagram(d1);
    const MultiInvariant inv = phi_multi(d1);

    c.run(kMultiHomomorphism, code + " | " + format_colored_diagram(d2), [&]() -> std::string {
        if (phi_multi(concat(d1, d2)) != compose_multi(inv, phi_multi(d2))) {
            return "phi_multi(d1.d2) != compose_multi(phi_multi(d1), phi_multi(d2))";
        }
        return {};
    });

    c.run(kMultiMoveInvariance, code, [&]() -> std::string {
        auto moves = enumerate_colored_moves(d1);
        const auto inserts = enumerate_colored_insertions(d1);
        moves.insert(moves.end(), inserts.begin(), inserts.end());
        for (const auto& mv : moves) {
            const ColoredGaussDiagram moved = apply_colored_move(d1, mv);
            if (phi_multi(moved) != inv) return "Phi changed under " + describe(mv) + " -> " + format_colored_diagram(moved);
            if (apply_colored_move(moved, inverse_colored_move(d1, mv)) != d1) return "could not undo " + describe(mv);
        }
        return {};
    });
}

}  // namespace

const std::vector<std::string>& verification_properties() {
    static const std::vector<std::string> names = {
        "move-invariance",      "homomorphism",        "dual-algorithm",       "hat-swap",
        "normal-form",          "normal-form-writhe",  "unit-evaluations",    "ribbon-presentations", "star-compatibility",
        "multi-specialization", "multi-homomorphism",  "multi-move-invariance",
    };
    return names;
}

VerifyReport run_verification(const VerifyOptions& options) {
    std::vector<ItemResult> results(options.count);
    const int max_arrows = std::max(options.max_arrows, 0);

    detail::parallel_for(options.count, options.threads, [&](std::size_t i) {
        // `verify --count 1 --seed <options.seed + i>` replays item i alone.
        const std::uint64_t replay_seed = options.seed + i;
        std::mt19937_64 rng(detail::mix_seed(replay_seed));
        const auto arrows = [&] { return static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(max_arrows) + 1)); };
        const GaussDiagram d = random_diagram(arrows(), rng());
        const GaussDiagram other = random_diagram(arrows(), rng());
        ItemChecker checker(i, replay_seed, results[i]);
        check_single(d, other, checker);
        check_multi(rng, max_arrows, checker);
    });

    VerifyReport report;
    for (const auto& name : verification_properties()) report.tallies.push_back({name, options.count, 0});
    for (const auto& r : results) {
        for (std::size_t p = 0; p < kPropertyCount; ++p) report.tallies[p].failed += r.failed[p] ? 1 : 0;
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
    }
    return report;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json tallies = nlohmann::json::array();
    for (const auto& t : report.tallies) tallies.push_back({{"property", t.name}, {"checked", t.checked}, {"failed", t.failed}});
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"property", f.property},
                            {"item", f.item},
                            {"seed", f.seed},
                            {"diagram", f.diagram},
                            {"detail", f.detail}});
    }
    return {{"ok", report.ok()}, {"properties", std::move(tallies)}, {"failures", std::move(failures)}};
}

}  // namespace vstring
