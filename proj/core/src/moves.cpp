#include "vstring/moves.hpp"

#include "strands.hpp"
#include "vstring/error.hpp"

namespace vstring {

namespace {

detail::Strands to_strands(const GaussDiagram& d) {
    detail::Strands s;
    s.lines.assign(1, std::vector<detail::Token>(static_cast<std::size_t>(d.endpoint_count())));
    s.rank = {0};
    s.arrow_count = static_cast<int>(d.arrow_count());
    int id = 0;
    for (const Arrow& a : d.arrows()) {
        s.lines[0][a.tail - 1] = {id, true};
        s.lines[0][a.head - 1] = {id, false};
        ++id;
    }
    return s;
}

GaussDiagram from_strands(const detail::Strands& s) {
    std::vector<Arrow> arrows(static_cast<std::size_t>(s.arrow_count));
    const auto& line = s.lines[0];
    for (int i = 0; i < static_cast<int>(line.size()); ++i) {
        (line[i].is_tail ? arrows[line[i].arrow].tail : arrows[line[i].arrow].head) = i + 1;
    }
    return GaussDiagram(std::move(arrows));
}

detail::GenericMove to_generic(const HomotopyMove& mv) {
    detail::GenericMove g{mv.kind, mv.direction, {}, mv.tail_first, mv.crossed};
    for (int p : mv.sites) g.sites.push_back({0, p});
    return g;
}

HomotopyMove from_generic(const detail::GenericMove& g) {
    HomotopyMove mv{g.kind, g.direction, {}, g.tail_first, g.crossed};
    for (const auto& slot : g.sites) mv.sites.push_back(slot.index);
    return mv;
}

}  // namespace

std::size_t InsertionSpace::h1_count() const { return 2 * static_cast<std::size_t>(gap_count); }

std::size_t InsertionSpace::h2_count() const {
    const auto g = static_cast<std::size_t>(gap_count);
    return 4 * g * (g + 1) / 2;
}

std::vector<HomotopyMove> InsertionSpace::all() const {
    detail::Strands s;
    s.lines.assign(1, std::vector<detail::Token>(static_cast<std::size_t>(gap_count - 1)));
    s.rank = {0};
    std::vector<HomotopyMove> out;
    for (const auto& g : detail::enumerate_insertions(s)) out.push_back(from_generic(g));
    return out;
}

MoveSet enumerate_moves(const GaussDiagram& d) {
    MoveSet set;
    for (const auto& g : detail::enumerate_moves(to_strands(d))) set.moves.push_back(from_generic(g));
    set.insertions.gap_count = d.endpoint_count() + 1;
    return set;
}

GaussDiagram apply_move(const GaussDiagram& d, const HomotopyMove& mv) {
    return from_strands(detail::apply_move(to_strands(d), to_generic(mv)));
}

HomotopyMove inverse_move(const GaussDiagram& d, const HomotopyMove& mv) {
    return from_generic(detail::inverse_move(to_strands(d), to_generic(mv)));
}

std::string to_string(MoveKind kind) {
    switch (kind) {
    case MoveKind::H1: return "H1";
    case MoveKind::H2: return "H2";
    case MoveKind::H3: return "H3";
    }
    return "?";
}

std::string to_string(MoveDirection direction) {
    switch (direction) {
    case MoveDirection::Insert: return "insert";
    case MoveDirection::Delete: return "delete";
    case MoveDirection::Slide: return "slide";
    }
    return "?";
}

std::string describe(const HomotopyMove& mv) {
    std::string out = to_string(mv.kind) + " " + to_string(mv.direction) + " ";
    for (std::size_t i = 0; i < mv.sites.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(mv.sites[i]);
    }
    if (mv.direction == MoveDirection::Insert) {
        out += mv.tail_first ? " tail-first" : " head-first";
        if (mv.kind == MoveKind::H2) out += mv.crossed ? " crossed" : " parallel";
    }
    return out;
}

}  // namespace vstring
