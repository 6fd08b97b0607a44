#include "strands.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "vstring/error.hpp"

namespace vstring::detail {

namespace {

struct Location {
    Slot tail;
    Slot head;
};

std::vector<Location> locate(const Strands& s) {
    std::vector<Location> loc(static_cast<std::size_t>(s.arrow_count));
    for (int l = 0; l < static_cast<int>(s.lines.size()); ++l) {
        const auto& line = s.lines[l];
        for (int i = 0; i < static_cast<int>(line.size()); ++i) {
            auto& entry = loc[line[i].arrow];
            (line[i].is_tail ? entry.tail : entry.head) = Slot{l, i + 1};
        }
    }
    return loc;
}

bool adjacent(Slot a, Slot b) { return a.line == b.line && (a.index - b.index == 1 || b.index - a.index == 1); }

bool valid_slot(const Strands& s, Slot x) {
    return x.line >= 0 && x.line < static_cast<int>(s.lines.size()) && x.index >= 1 &&
           x.index <= static_cast<int>(s.lines[x.line].size());
}

// A pair starting at `x` is the two slots (x, x+1) on the same line.
bool valid_pair(const Strands& s, Slot x) { return valid_slot(s, x) && valid_slot(s, Slot{x.line, x.index + 1}); }

Slot second(Slot x) { return Slot{x.line, x.index + 1}; }

bool pairs_disjoint(const std::vector<Slot>& starts) {
    for (std::size_t i = 0; i < starts.size(); ++i) {
        for (std::size_t j = i + 1; j < starts.size(); ++j) {
            if (starts[i].line == starts[j].line && std::abs(starts[i].index - starts[j].index) < 2) return false;
        }
    }
    return true;
}

bool sorted_by_traversal(const Strands& s, const std::vector<Slot>& sites) {
    for (std::size_t i = 1; i < sites.size(); ++i) {
        if (!s.before(sites[i - 1], sites[i])) return false;
    }
    return true;
}

[[noreturn]] void not_applicable(const std::string& what) { throw ValidationError("move not applicable: " + what); }

void check_h1(const Strands& s, const std::vector<Slot>& sites) {
    if (sites.size() != 1 || !valid_pair(s, sites[0])) not_applicable("H1 needs one adjacent position pair");
    if (s.at(sites[0]).arrow != s.at(second(sites[0])).arrow) not_applicable("H1 pair is not a single arrow");
}

void check_h2(const Strands& s, const std::vector<Slot>& sites) {
    if (sites.size() != 2 || !valid_pair(s, sites[0]) || !valid_pair(s, sites[1]) || !pairs_disjoint(sites) ||
        !sorted_by_traversal(s, sites)) {
        not_applicable("H2 needs two disjoint adjacent pairs in traversal order");
    }
    const Token& p0 = s.at(sites[0]);
    const Token& p1 = s.at(second(sites[0]));
    const Token& q0 = s.at(sites[1]);
    const Token& q1 = s.at(second(sites[1]));
    if (p0.arrow == p1.arrow) not_applicable("H2 pair holds both ends of one arrow");
    const bool joined = (q0.arrow == p0.arrow && q1.arrow == p1.arrow) || (q0.arrow == p1.arrow && q1.arrow == p0.arrow);
    if (!joined) not_applicable("H2 arrows do not join the two pairs");
    if (p0.is_tail == p1.is_tail) not_applicable("H2 arrows point the same way");
}

// Pair index (0..2) holding the far end of the arrow at `x`.
int partner_pair(const Strands& s, const std::vector<Slot>& sites, Slot x) {
    const int arrow = s.at(x).arrow;
    for (int k = 0; k < 3; ++k) {
        for (Slot y : {sites[k], second(sites[k])}) {
            if (!(y == x) && s.at(y).arrow == arrow) return k;
        }
    }
    return -1;
}

void check_h3(const Strands& s, const std::vector<Slot>& sites) {
    if (sites.size() != 3 || !valid_pair(s, sites[0]) || !valid_pair(s, sites[1]) || !valid_pair(s, sites[2]) ||
        !pairs_disjoint(sites) || !sorted_by_traversal(s, sites)) {
        not_applicable("H3 needs three disjoint adjacent pairs in traversal order");
    }
    // first[k]: pair reached by the arrow at the first slot of pair k.
    // tail_in[k][j]: the arrow between pairs k and j has its tail in k.
    std::array<int, 3> first{};
    std::array<std::array<bool, 3>, 3> tail_in{};
    for (int k = 0; k < 3; ++k) {
        const int a = partner_pair(s, sites, sites[k]);
        const int b = partner_pair(s, sites, second(sites[k]));
        if (a < 0 || b < 0 || a == k || b == k || a == b) not_applicable("H3 arrows do not form a triangle");
        first[k] = a;
        tail_in[k][a] = s.at(sites[k]).is_tail;
        tail_in[k][b] = s.at(second(sites[k])).is_tail;
    }
    // Only triangles drawable by three straight strands are slides; the
    // other endpoint patterns are not local pictures of a plane curve.
    constexpr int P = 0, Q = 1, R = 2;
    const bool ok = (tail_in[P][R] != tail_in[Q][R]) == ((first[P] == R) != (first[Q] == R)) &&
                    (tail_in[P][Q] != tail_in[P][R]) == ((first[Q] == R) != (first[R] == Q));
    if (!ok) not_applicable("H3 triangle is not realizable");
}

void check_gap(const Strands& s, Slot g) {
    if (g.line < 0 || g.line >= static_cast<int>(s.lines.size()) || g.index < 0 ||
        g.index > static_cast<int>(s.lines[g.line].size())) {
        not_applicable("insertion gap out of range");
    }
}

bool gap_order(const Strands& s, Slot a, Slot b) {
    return s.rank[a.line] != s.rank[b.line] ? s.rank[a.line] < s.rank[b.line] : a.index <= b.index;
}

// Renumber arrow ids to 0..k-1 after deletions.
void compact(Strands& s) {
    std::vector<int> remap(static_cast<std::size_t>(s.arrow_count), -1);
    int next = 0;
    for (auto& line : s.lines) {
        for (auto& tok : line) {
            if (remap[tok.arrow] < 0) remap[tok.arrow] = next++;
            tok.arrow = remap[tok.arrow];
        }
    }
    s.arrow_count = next;
}

void erase_slots(Strands& s, std::vector<Slot> slots) {
    std::sort(slots.begin(), slots.end(), [](Slot a, Slot b) {
        return a.line != b.line ? a.line < b.line : a.index > b.index;
    });
    for (Slot x : slots) s.lines[x.line].erase(s.lines[x.line].begin() + (x.index - 1));
}

// Group endpoints into adjacent pairs in traversal order; empty on failure.
std::vector<Slot> pair_up(const Strands& s, std::vector<Slot> ends) {
    std::sort(ends.begin(), ends.end(), [&](Slot a, Slot b) { return s.before(a, b); });
    std::vector<Slot> starts;
    for (std::size_t i = 0; i + 1 < ends.size(); i += 2) {
        if (!adjacent(ends[i], ends[i + 1])) return {};
        starts.push_back(ends[i]);
    }
    return starts;
}

template <class Check>
bool passes(Check check, const Strands& s, const std::vector<Slot>& sites) {
    try {
        check(s, sites);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

}  // namespace

std::vector<GenericMove> enumerate_moves(const Strands& s) {
    const auto loc = locate(s);
    const int m = s.arrow_count;
    std::vector<GenericMove> out;

    for (int a = 0; a < m; ++a) {
        if (adjacent(loc[a].tail, loc[a].head)) {
            const Slot first = s.before(loc[a].tail, loc[a].head) ? loc[a].tail : loc[a].head;
            out.push_back({MoveKind::H1, MoveDirection::Delete, {first}, true, false});
        }
    }
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            auto sites = pair_up(s, {loc[a].tail, loc[a].head, loc[b].tail, loc[b].head});
            if (sites.size() == 2 && passes(check_h2, s, sites)) {
                out.push_back({MoveKind::H2, MoveDirection::Delete, std::move(sites), true, false});
            }
        }
    }
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            for (int c = b + 1; c < m; ++c) {
                auto sites = pair_up(s, {loc[a].tail, loc[a].head, loc[b].tail, loc[b].head, loc[c].tail, loc[c].head});
                if (sites.size() == 3 && passes(check_h3, s, sites)) {
                    out.push_back({MoveKind::H3, MoveDirection::Slide, std::move(sites), true, false});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const GenericMove& x, const GenericMove& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        return std::lexicographical_compare(x.sites.begin(), x.sites.end(), y.sites.begin(), y.sites.end(),
                                            [&](Slot p, Slot q) { return s.before(p, q); });
    });
    return out;
}

Strands apply_move(const Strands& s, const GenericMove& mv) {
    Strands out = s;
    switch (mv.direction) {
    case MoveDirection::Delete: {
        if (mv.kind == MoveKind::H1) {
            check_h1(s, mv.sites);
        } else if (mv.kind == MoveKind::H2) {
            check_h2(s, mv.sites);
        } else {
            not_applicable("H3 has no deletion");
        }
        std::vector<Slot> doomed;
        for (Slot x : mv.sites) {
            doomed.push_back(x);
            doomed.push_back(second(x));
        }
        erase_slots(out, std::move(doomed));
        compact(out);
        return out;
    }
    case MoveDirection::Slide: {
        if (mv.kind != MoveKind::H3) not_applicable("only H3 slides");
        check_h3(s, mv.sites);
        for (Slot x : mv.sites) {
            auto& line = out.lines[x.line];
            std::swap(line[x.index - 1], line[x.index]);
        }
        return out;
    }
    case MoveDirection::Insert: {
        const int a = out.arrow_count;
        if (mv.kind == MoveKind::H1) {
            if (mv.sites.size() != 1) not_applicable("H1 insertion needs one gap");
            check_gap(s, mv.sites[0]);
            auto& line = out.lines[mv.sites[0].line];
            const auto at = line.begin() + mv.sites[0].index;
            line.insert(at, {Token{a, mv.tail_first}, Token{a, !mv.tail_first}});
            out.arrow_count = a + 1;
            return out;
        }
        if (mv.kind == MoveKind::H2) {
            if (mv.sites.size() != 2) not_applicable("H2 insertion needs two gaps");
            check_gap(s, mv.sites[0]);
            check_gap(s, mv.sites[1]);
            if (!gap_order(s, mv.sites[0], mv.sites[1])) not_applicable("H2 insertion gaps out of traversal order");
            const int b = a + 1;
            const std::array<Token, 2> p{Token{a, mv.tail_first}, Token{b, !mv.tail_first}};
            std::array<Token, 2> q{Token{a, !mv.tail_first}, Token{b, mv.tail_first}};
            if (mv.crossed) std::swap(q[0], q[1]);
            // Second gap first so the first gap's offset stays valid.
            auto& lq = out.lines[mv.sites[1].line];
            lq.insert(lq.begin() + mv.sites[1].index, q.begin(), q.end());
            auto& lp = out.lines[mv.sites[0].line];
            lp.insert(lp.begin() + mv.sites[0].index, p.begin(), p.end());
            out.arrow_count = a + 2;
            return out;
        }
        not_applicable("H3 has no insertion");
    }
    }
    not_applicable("unknown move");
}

GenericMove inverse_move(const Strands& s, const GenericMove& mv) {
    switch (mv.direction) {
    case MoveDirection::Slide:
        check_h3(s, mv.sites);
        return mv;
    case MoveDirection::Delete:
        if (mv.kind == MoveKind::H1) {
            check_h1(s, mv.sites);
            const Slot p = mv.sites[0];
            return {MoveKind::H1, MoveDirection::Insert, {Slot{p.line, p.index - 1}}, s.at(p).is_tail, false};
        } else {
            check_h2(s, mv.sites);
            const Slot p = mv.sites[0];
            const Slot q = mv.sites[1];
            const int shift = (p.line == q.line) ? 2 : 0;
            const bool crossed = s.at(second(q)).arrow == s.at(p).arrow;
            return {MoveKind::H2, MoveDirection::Insert, {Slot{p.line, p.index - 1}, Slot{q.line, q.index - 1 - shift}},
                    s.at(p).is_tail, crossed};
        }
    case MoveDirection::Insert:
        if (mv.kind == MoveKind::H1) {
            const Slot g = mv.sites.at(0);
            return {MoveKind::H1, MoveDirection::Delete, {Slot{g.line, g.index + 1}}, true, false};
        } else {
            const Slot g1 = mv.sites.at(0);
            const Slot g2 = mv.sites.at(1);
            const int shift = (g1.line == g2.line) ? 2 : 0;
            return {MoveKind::H2, MoveDirection::Delete, {Slot{g1.line, g1.index + 1}, Slot{g2.line, g2.index + 1 + shift}},
                    true, false};
        }
    }
    not_applicable("unknown move");
}

std::vector<GenericMove> enumerate_insertions(const Strands& s) {
    std::vector<Slot> gaps;
    std::vector<int> order(s.lines.size());
    for (int l = 0; l < static_cast<int>(s.lines.size()); ++l) order[s.rank[l]] = l;
    for (int l : order) {
        for (int g = 0; g <= static_cast<int>(s.lines[l].size()); ++g) gaps.push_back(Slot{l, g});
    }
    std::vector<GenericMove> out;
    for (Slot g : gaps) {
        for (bool tf : {true, false}) out.push_back({MoveKind::H1, MoveDirection::Insert, {g}, tf, false});
    }
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        for (std::size_t j = i; j < gaps.size(); ++j) {
            for (bool tf : {true, false}) {
                for (bool crossed : {false, true}) {
                    out.push_back({MoveKind::H2, MoveDirection::Insert, {gaps[i], gaps[j]}, tf, crossed});
                }
            }
        }
    }
    return out;
}

}  // namespace vstring::detail
