#include "cli.hpp"

#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vstring/census.hpp"
#include "vstring/error.hpp"
#include "vstring/gauss_diagram.hpp"
#include "vstring/invariant.hpp"
#include "vstring/moves.hpp"
#include "vstring/multistring.hpp"
#include "vstring/verify.hpp"

namespace vstring::cli {

namespace {

using json = nlohmann::json;

struct Context {
    std::ostream& out;
    bool json_output = false;
};

void print_json(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

std::string join(std::span<const int> xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(xs[i]);
    }
    return s;
}

void print_multi(Context& ctx, const MultiInvariant& inv) {
    if (ctx.json_output) return print_json(ctx, to_json(inv));
    ctx.out << "perm: " << join(inv.permutation) << '\n';
    for (std::size_t j = 0; j < inv.words.size(); ++j) {
        ctx.out << "L" << j + 1 << ": " << format_word(inv.words[j]) << '\n';
    }
}

int cmd_phi(Context& ctx, const std::string& code) {
    if (looks_colored(code)) {
        print_multi(ctx, phi_multi(parse_colored_diagram(code)));
        return kOk;
    }
    const auto d = parse_diagram(code);
    const auto w = phi(d).word;
    if (ctx.json_output) {
        print_json(ctx, {{"diagram", format_diagram(d)}, {"word", format_word(w)}, {"length", w.length()}});
    } else {
        ctx.out << format_word(w) << '\n';
    }
    return kOk;
}

int cmd_poly(Context& ctx, const std::string& code) {
    const auto d = parse_diagram(code);
    const auto p = canonical_string(phi_poly(d));
    if (ctx.json_output) {
        print_json(ctx, {{"diagram", format_diagram(d)}, {"poly", p}});
    } else {
        ctx.out << p << '\n';
    }
    return kOk;
}

int cmd_compose(Context& ctx, const std::string& first, const std::string& second) {
    if (looks_colored(first) || looks_colored(second)) {
        print_multi(ctx, compose_multi(phi_multi(parse_colored_diagram(first)), phi_multi(parse_colored_diagram(second))));
        return kOk;
    }
    const auto w = compose(phi(parse_diagram(first)), phi(parse_diagram(second))).word;
    if (ctx.json_output) {
        print_json(ctx, {{"word", format_word(w)}});
    } else {
        ctx.out << format_word(w) << '\n';
    }
    return kOk;
}

int cmd_commute(Context& ctx, const std::string& first, const std::string& second) {
    const auto r = commute_check(parse_diagram(first), parse_diagram(second));
    if (ctx.json_output) {
        print_json(ctx, {{"commute", r.commute}, {"forward", format_word(r.forward)}, {"backward", format_word(r.backward)}});
        return kOk;
    }
    ctx.out << (r.commute ? "COMMUTE" : "DISTINCT") << '\n';
    ctx.out << "d1.d2: " << format_word(r.forward) << '\n';
    ctx.out << "d2.d1: " << format_word(r.backward) << '\n';
    return kOk;
}

int cmd_ribbon(Context& ctx, const std::string& code, bool full) {
    const auto d = parse_diagram(code);
    const auto v = full ? ribbon_obstruction_full(d) : ribbon_obstruction_abelian(d);
    if (ctx.json_output) {
        print_json(ctx, to_json(v));
        return kOk;
    }
    const std::string lhs_name = full ? "Phi(alpha)" : "phi(u,v)";
    const std::string rhs_name = full ? "Phi(hat alpha)" : "phi(v,u)";
    if (v.certifies_not_ribbon()) {
        ctx.out << "FAIL (" << to_string(v.obstruction) << "): " << lhs_name << " != " << rhs_name << '\n';
        ctx.out << "not ribbon\n";
    } else {
        ctx.out << "PASS (" << to_string(v.obstruction) << "): " << lhs_name << " = " << rhs_name << '\n';
        ctx.out << "inconclusive: the obstruction is only a necessary condition\n";
    }
    ctx.out << lhs_name << ": " << witness_string(v.lhs) << '\n';
    ctx.out << rhs_name << ": " << witness_string(v.rhs) << '\n';
    return kOk;
}

int cmd_transform(Context& ctx, const std::string& code, GaussDiagram (*fn)(const GaussDiagram&)) {
    const auto d = fn(parse_diagram(code));
    if (ctx.json_output) {
        print_json(ctx, to_json(d));
    } else {
        ctx.out << format_diagram(d) << '\n';
    }
    return kOk;
}

int cmd_moves(Context& ctx, const std::string& code) {
    const auto set = enumerate_moves(parse_diagram(code));
    if (ctx.json_output) {
        json moves = json::array();
        for (const auto& mv : set.moves) {
            moves.push_back({{"kind", to_string(mv.kind)}, {"direction", to_string(mv.direction)}, {"sites", mv.sites}});
        }
        print_json(ctx, {{"moves", std::move(moves)},
                         {"insertions",
                          {{"gaps", set.insertions.gap_count},
                           {"h1", set.insertions.h1_count()},
                           {"h2", set.insertions.h2_count()}}}});
        return kOk;
    }
    for (const auto& mv : set.moves) ctx.out << describe(mv) << '\n';
    ctx.out << "insertions: " << set.insertions.gap_count << " gaps, " << set.insertions.h1_count() << " H1, "
            << set.insertions.h2_count() << " H2\n";
    return kOk;
}

int cmd_random(Context& ctx, int arrows, std::uint64_t seed, int lines) {
    if (lines > 0) {
        const auto d = random_colored_diagram(lines, arrows, seed);
        if (ctx.json_output) {
            print_json(ctx, to_json(d));
        } else {
            ctx.out << format_colored_diagram(d) << '\n';
        }
        return kOk;
    }
    const auto d = random_diagram(arrows, seed);
    if (ctx.json_output) {
        print_json(ctx, to_json(d));
    } else {
        ctx.out << format_diagram(d) << '\n';
    }
    return kOk;
}

int cmd_verify(Context& ctx, const VerifyOptions& options) {
    const auto report = run_verification(options);
    if (ctx.json_output) {
        print_json(ctx, to_json(report));
    } else {
        for (const auto& t : report.tallies) {
            ctx.out << t.name << ": " << t.checked << " checked, " << t.failed << " failed\n";
        }
        // Text mode shows a few reproducers per property; --json has them all.
        constexpr std::size_t kShown = 5;
        std::map<std::string, std::size_t> shown;
        for (const auto& f : report.failures) {
            if (shown[f.property]++ >= kShown) continue;
            ctx.out << "FAIL " << f.property << " seed=" << f.seed << " diagram=\"" << f.diagram << "\": " << f.detail
                    << '\n';
        }
        for (const auto& [property, n] : shown) {
            if (n > kShown) ctx.out << "... " << n - kShown << " more " << property << " failures\n";
        }
        ctx.out << (report.ok() ? "OK" : "FALSIFIED") << '\n';
    }
    return report.ok() ? kOk : kFalsified;
}

int cmd_census(Context& ctx, const CensusOptions& options) {
    const auto report = run_census(options);
    if (ctx.json_output) {
        print_json(ctx, to_json(report));
    } else {
        ctx.out << "diagrams: " << report.diagrams << " (by arrows:";
        for (auto n : report.diagrams_by_arrows) ctx.out << ' ' << n;
        ctx.out << ")\n";
        ctx.out << "move classes (upper bound, depth " << report.depth << "): " << report.move_classes << '\n';
        ctx.out << "invariant classes (lower bound): " << report.invariant_classes << '\n';
        ctx.out << "trivial invariant: " << report.trivial_invariant << '\n';
        ctx.out << "commuting pairs: " << report.commuting_pairs << '\n';
        ctx.out << "non-commuting pairs: " << report.noncommuting_pairs << '\n';
        ctx.out << "ribbon presentations: " << report.ribbon_presentations << '\n';
        ctx.out << "abelian obstruction failures: " << report.abelian_failures << '\n';
        ctx.out << "full obstruction failures: " << report.full_failures << '\n';
        ctx.out << "full-only failures: " << report.full_only_failures << '\n';
        ctx.out << "abelian-only failures: " << report.abelian_only_failures << '\n';
        ctx.out << "invariant conflicts: " << report.invariant_conflicts << '\n';
    }
    return report.consistent() ? kOk : kFalsified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of open virtual strings from Gauss codes", "vstring"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx{out};
    app.add_flag("--json", ctx.json_output, "Machine-readable output");

    std::function<int()> action;
    std::string code, code2;
    bool full = false;
    int arrows = 0, lines = 0;
    std::uint64_t seed = 0;
    VerifyOptions verify;
    CensusOptions census;

    auto single = [&](const std::string& name, const std::string& help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("code", code, "Gauss code, e.g. \"1>3,2>4\"")->required();
        sub->callback([&, fn] { action = [&, fn] { return fn(); }; });
        return sub;
    };
    auto pair = [&](const std::string& name, const std::string& help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("first", code, "Left factor")->required();
        sub->add_option("second", code2, "Right factor")->required();
        sub->callback([&, fn] { action = [&, fn] { return fn(); }; });
        return sub;
    };

    single("phi", "Print the invariant word (colored codes give one word per line)", [&] { return cmd_phi(ctx, code); });
    single("poly", "Print the exponent-sum polynomial", [&] { return cmd_poly(ctx, code); });
    pair("compose", "Print the invariant of the product first.second", [&] { return cmd_compose(ctx, code, code2); });
    pair("commute", "Decide whether Phi separates the two products", [&] { return cmd_commute(ctx, code, code2); });
    single("ribbon", "Run a ribbon obstruction", [&] { return cmd_ribbon(ctx, code, full); })
        ->add_flag("--full", full, "Compare Phi(alpha) with Phi(hat alpha) instead of phi(u,v) with phi(v,u)");
    single("hat", "Reflect about the midpoint and reverse arrows", [&] { return cmd_transform(ctx, code, &hat); });
    single("star", "Reverse every arrow", [&] { return cmd_transform(ctx, code, &star); });
    single("moves", "List applicable homotopy moves", [&] { return cmd_moves(ctx, code); });

    auto* random = app.add_subcommand("random", "Print a seeded random diagram");
    random->add_option("arrows", arrows, "Number of arrows")->required()->check(CLI::NonNegativeNumber);
    random->add_option("--seed", seed, "Random seed");
    random->add_option("--lines", lines, "Emit a colored diagram on this many lines")->check(CLI::NonNegativeNumber);
    random->callback([&] { action = [&] { return cmd_random(ctx, arrows, seed, lines); }; });

    auto* ver = app.add_subcommand("verify", "Run the property suite on random diagrams");
    ver->add_option("--count", verify.count, "Number of random items")->capture_default_str();
    ver->add_option("--max-arrows", verify.max_arrows, "Largest diagram size")->capture_default_str()->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", verify.seed, "Master seed")->capture_default_str();
    ver->add_option("--threads", verify.threads, "Worker threads (0: all cores)");
    ver->callback([&] { action = [&] { return cmd_verify(ctx, verify); }; });

    auto* cen = app.add_subcommand("census", "Enumerate all diagrams up to a size");
    cen->add_option("--max-arrows", census.max_arrows, "Largest diagram size")->capture_default_str()->check(CLI::Range(0, 6));
    cen->add_option("--depth", census.depth, "Move search radius per diagram")->capture_default_str()->check(CLI::NonNegativeNumber);
    cen->add_option("--threads", census.threads, "Worker threads (0: all cores)");
    cen->callback([&] { action = [&] { return cmd_census(ctx, census); }; });

    std::vector<const char*> argv{"vstring"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kOk : kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const NormalFormError& e) {
        err << "falsified: " << e.what() << '\n';
        return kFalsified;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
}

}  // namespace vstring::cli
