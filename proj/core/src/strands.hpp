#pragma once

// Line-agnostic homotopy move engine shared by single strings (one line)
// and colored n-strings (several lines). Not part of the installed API.

#include <vector>

#include "vstring/moves.hpp"

namespace vstring::detail {

// line is 0-based, index is 1-based (or a 0-based gap for insertions).
struct Slot {
    int line = 0;
    int index = 0;
    friend bool operator==(const Slot&, const Slot&) = default;
};

struct Token {
    int arrow = 0;
    bool is_tail = false;
};

struct Strands {
    std::vector<std::vector<Token>> lines;
    std::vector<int> rank;  // traversal rank of each line
    int arrow_count = 0;

    const Token& at(Slot s) const { return lines[s.line][s.index - 1]; }
    // Traversal order comparison.
    bool before(Slot a, Slot b) const {
        return rank[a.line] != rank[b.line] ? rank[a.line] < rank[b.line] : a.index < b.index;
    }
};

struct GenericMove {
    MoveKind kind = MoveKind::H1;
    MoveDirection direction = MoveDirection::Delete;
    std::vector<Slot> sites;
    bool tail_first = true;
    bool crossed = false;
};

std::vector<GenericMove> enumerate_moves(const Strands& s);
Strands apply_move(const Strands& s, const GenericMove& mv);
GenericMove inverse_move(const Strands& s, const GenericMove& mv);

// Every insertion available on `s`; gaps per line are lines[l].size() + 1.
std::vector<GenericMove> enumerate_insertions(const Strands& s);

}  // namespace vstring::detail
