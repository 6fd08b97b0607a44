#pragma once

#include <string>
#include <vector>

#include "vstring/gauss_diagram.hpp"

namespace vstring {

enum class MoveKind { H1, H2, H3 };
enum class MoveDirection { Insert, Delete, Slide };

// A homotopy move on a Gauss diagram.
//
// Deletions and slides name the first position of every adjacent position
// pair they touch, sorted ascending: H1 {p} removes the arrow on (p, p+1);
// H2 {i, j} removes the two arrows joining (i, i+1) and (j, j+1); H3
// {i, j, k} swaps the endpoints inside each of the three pairs.
//
// Insertions name gaps instead (gap g sits between positions g and g+1,
// 0 <= g <= 2m), measured in the diagram before insertion. H1 {g} inserts
// one arrow; `tail_first` says whether its left endpoint is the tail.
// H2 {g1, g2} with g1 <= g2 inserts a pair of endpoints at each gap.
// The arrow leaving the first endpoint of the first pair lands on the
// first endpoint of the second pair, or on its second endpoint when
// `crossed`. That arrow points right when `tail_first`; the other arrow
// points the opposite way.
struct HomotopyMove {
    MoveKind kind = MoveKind::H1;
    MoveDirection direction = MoveDirection::Delete;
    std::vector<int> sites;
    bool tail_first = true;
    bool crossed = false;

    friend bool operator==(const HomotopyMove&, const HomotopyMove&) = default;
};

// Insertions are always available; rather than listing them eagerly the
// move set carries their parameter space.
struct InsertionSpace {
    int gap_count = 1;  // 2m + 1

    std::size_t h1_count() const;
    std::size_t h2_count() const;
    std::vector<HomotopyMove> all() const;
};

struct MoveSet {
    std::vector<HomotopyMove> moves;  // applicable deletions and slides
    InsertionSpace insertions;
};

MoveSet enumerate_moves(const GaussDiagram& d);

// Throws ValidationError if the move does not apply at its site.
GaussDiagram apply_move(const GaussDiagram& d, const HomotopyMove& mv);

// The move that undoes `mv` on apply_move(d, mv).
HomotopyMove inverse_move(const GaussDiagram& d, const HomotopyMove& mv);

std::string to_string(MoveKind kind);
std::string to_string(MoveDirection direction);
std::string describe(const HomotopyMove& mv);

}  // namespace vstring
