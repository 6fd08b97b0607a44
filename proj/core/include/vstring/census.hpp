#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vstring/gauss_diagram.hpp"

namespace vstring {

struct CensusOptions {
    int max_arrows = 3;
    // Radius of the deletion/slide search run from every diagram when
    // merging move classes.
    int depth = 8;
    unsigned threads = 0;
};

struct CensusReport {
    int max_arrows = 0;
    int depth = 0;
    std::vector<std::size_t> diagrams_by_arrows;
    std::size_t diagrams = 0;
    // Classes of diagrams joined by moves that never leave the census
    // (at most max_arrows arrows). An upper bound on homotopy classes.
    std::size_t move_classes = 0;
    // Distinct Phi words. A lower bound on homotopy classes.
    std::size_t invariant_classes = 0;
    std::size_t trivial_invariant = 0;
    // Unordered pairs of distinct invariant classes.
    std::size_t commuting_pairs = 0;
    std::size_t noncommuting_pairs = 0;
    std::size_t ribbon_presentations = 0;
    std::size_t abelian_failures = 0;
    std::size_t full_failures = 0;
    // Diagrams the full obstruction rejects but the abelian one does not.
    std::size_t full_only_failures = 0;
    // Must be zero: equal words have equal abelianizations.
    std::size_t abelian_only_failures = 0;
    // Must be zero: a move class containing two different Phi words.
    std::size_t invariant_conflicts = 0;

    bool consistent() const noexcept { return abelian_only_failures == 0 && invariant_conflicts == 0; }
};

// Every directed Gauss diagram with exactly m arrows, in a fixed order.
std::vector<GaussDiagram> all_diagrams(int arrow_count);

CensusReport run_census(const CensusOptions& options);

nlohmann::json to_json(const CensusReport& report);

}  // namespace vstring
