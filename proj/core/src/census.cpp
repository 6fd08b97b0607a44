#include "vstring/census.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "parallel.hpp"
#include "vstring/invariant.hpp"
#include "vstring/moves.hpp"

namespace vstring {

namespace {

void pairings(std::vector<int>& free, std::vector<std::pair<int, int>>& current,
              std::vector<std::vector<std::pair<int, int>>>& out) {
    if (free.empty()) {
        out.push_back(current);
        return;
    }
    const int first = free.front();
    for (std::size_t k = 1; k < free.size(); ++k) {
        const int partner = free[k];
        std::vector<int> rest;
        rest.reserve(free.size() - 2);
        for (std::size_t i = 1; i < free.size(); ++i)
            if (i != k) rest.push_back(free[i]);
        current.emplace_back(first, partner);
        pairings(rest, current, out);
        current.pop_back();
    }
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

}  // namespace

std::vector<GaussDiagram> all_diagrams(int arrow_count) {
    std::vector<int> free(static_cast<std::size_t>(2 * std::max(arrow_count, 0)));
    std::iota(free.begin(), free.end(), 1);
    std::vector<std::pair<int, int>> current;
    std::vector<std::vector<std::pair<int, int>>> matchings;
    pairings(free, current, matchings);

    std::vector<GaussDiagram> out;
    const std::size_t m = static_cast<std::size_t>(std::max(arrow_count, 0));
    for (const auto& matching : matchings) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            std::vector<Arrow> arrows;
            for (std::size_t k = 0; k < m; ++k) {
                const auto [a, b] = matching[k];
                arrows.push_back(((mask >> k) & 1) ? Arrow{b, a} : Arrow{a, b});
            }
            out.emplace_back(std::move(arrows));
        }
    }
    return out;
}

CensusReport run_census(const CensusOptions& options) {
    CensusReport report;
    report.max_arrows = options.max_arrows;
    report.depth = options.depth;

    std::vector<GaussDiagram> diagrams;
    for (int m = 0; m <= options.max_arrows; ++m) {
        auto batch = all_diagrams(m);
        report.diagrams_by_arrows.push_back(batch.size());
        diagrams.insert(diagrams.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    report.diagrams = diagrams.size();

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < diagrams.size(); ++i) index.emplace(format_diagram(diagrams[i]), i);

    std::vector<Word> words(diagrams.size());
    std::vector<char> abelian_fail(diagrams.size(), 0);
    std::vector<char> full_fail(diagrams.size(), 0);
    std::vector<std::vector<std::size_t>> reached(diagrams.size());

    detail::parallel_for(diagrams.size(), options.threads, [&](std::size_t i) {
        const GaussDiagram& d = diagrams[i];
        words[i] = phi(d).word;
        abelian_fail[i] = ribbon_obstruction_abelian(d).certifies_not_ribbon();
        full_fail[i] = ribbon_obstruction_full(d).certifies_not_ribbon();

        // Deletions and slides never add arrows, so the search stays inside the census.
        std::unordered_set<std::string> seen{format_diagram(d)};
        std::vector<GaussDiagram> frontier{d};
        for (int step = 0; step < options.depth && !frontier.empty(); ++step) {
            std::vector<GaussDiagram> next;
            for (const auto& x : frontier) {
                for (const auto& mv : enumerate_moves(x).moves) {
                    GaussDiagram y = apply_move(x, mv);
                    auto code = format_diagram(y);
                    if (seen.insert(code).second) {
                        reached[i].push_back(index.at(code));
                        next.push_back(std::move(y));
                    }
                }
            }
            frontier = std::move(next);
        }
    });

    UnionFind classes(diagrams.size());
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        for (std::size_t j : reached[i]) classes.unite(i, j);
    }
    std::unordered_map<std::size_t, std::size_t> class_word;  // root -> first member
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        const std::size_t root = classes.find(i);
        auto [it, inserted] = class_word.emplace(root, i);
        if (!inserted && words[it->second] != words[i]) ++report.invariant_conflicts;
    }
    report.move_classes = class_word.size();

    std::unordered_map<Word, std::size_t, WordHash> distinct;
    std::vector<StringInvariant> representatives;
    const Word identity = StringInvariant::identity().word;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        if (distinct.emplace(words[i], representatives.size()).second) representatives.push_back({words[i]});
        if (words[i] == identity) ++report.trivial_invariant;
        if (is_ribbon_presentation(diagrams[i])) ++report.ribbon_presentations;
        report.abelian_failures += abelian_fail[i];
        report.full_failures += full_fail[i];
        if (full_fail[i] && !abelian_fail[i]) ++report.full_only_failures;
        if (abelian_fail[i] && !full_fail[i]) ++report.abelian_only_failures;
    }
    report.invariant_classes = representatives.size();

    const std::size_t k = representatives.size();
    std::vector<std::size_t> commuting(k, 0);
    detail::parallel_for(k, options.threads, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (compose(representatives[i], representatives[j]) == compose(representatives[j], representatives[i])) {
                ++commuting[i];
            }
        }
    });
    report.commuting_pairs = std::accumulate(commuting.begin(), commuting.end(), std::size_t{0});
    report.noncommuting_pairs = k * (k - (k > 0 ? 1 : 0)) / 2 - report.commuting_pairs;
    return report;
}

nlohmann::json to_json(const CensusReport& r) {
    return {{"max_arrows", r.max_arrows},
            {"depth", r.depth},
            {"diagrams_by_arrows", r.diagrams_by_arrows},
            {"diagrams", r.diagrams},
            {"move_classes", r.move_classes},
            {"invariant_classes", r.invariant_classes},
            {"trivial_invariant", r.trivial_invariant},
            {"commuting_pairs", r.commuting_pairs},
            {"noncommuting_pairs", r.noncommuting_pairs},
            {"ribbon_presentations", r.ribbon_presentations},
            {"abelian_failures", r.abelian_failures},
            {"full_failures", r.full_failures},
            {"full_only_failures", r.full_only_failures},
            {"abelian_only_failures", r.abelian_only_failures},
            {"invariant_conflicts", r.invariant_conflicts},
            {"consistent", r.consistent()}};
}

}  // namespace vstring
