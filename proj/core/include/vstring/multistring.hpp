#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vstring/moves.hpp"
#include "vstring/word.hpp"

namespace vstring {

// Slot `slot` (1-based) on line `line` (1-based, numbered by left height).
struct Endpoint {
    int line = 1;
    int slot = 1;
    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct ColoredArrow {
    Endpoint tail;
    Endpoint head;
    friend bool operator==(const ColoredArrow&, const ColoredArrow&) = default;
};

// Gauss diagram of a colored open n-string. Line j starts at left height j,
// carries color colors[j-1] and exits at right height permutation[j-1].
// Components are traversed in color order (color 1 first), each left to
// right; the first endpoint of an arrow reached this way is the overcrossing.
class ColoredGaussDiagram {
public:
    // Throws ValidationError unless colors and permutation are permutations
    // of 1..n and the endpoints on every line are exactly slots 1..k.
    ColoredGaussDiagram(int line_count, std::vector<int> colors, std::vector<int> permutation,
                        std::vector<ColoredArrow> arrows);

    // n lines, no crossings, identity permutation, colors 1..n.
    static ColoredGaussDiagram trivial(int line_count);

    int line_count() const noexcept { return static_cast<int>(colors_.size()); }
    std::span<const int> colors() const noexcept { return colors_; }
    std::span<const int> permutation() const noexcept { return permutation_; }
    std::span<const ColoredArrow> arrows() const noexcept { return arrows_; }
    int slot_count(int line) const { return slots_.at(static_cast<std::size_t>(line - 1)); }
    int color_of(int line) const { return colors_.at(static_cast<std::size_t>(line - 1)); }

    // Lines in traversal order.
    std::vector<int> traversal_order() const;
    // True when a is traversed before b.
    bool before(Endpoint a, Endpoint b) const;

    friend bool operator==(const ColoredGaussDiagram&, const ColoredGaussDiagram&) = default;

private:
    std::vector<int> colors_;
    std::vector<int> permutation_;
    std::vector<int> slots_;
    std::vector<ColoredArrow> arrows_;
};

// `n=2; colors=1,2; perm=2,1; L1.1 > L2.1, L2.2 > L1.2` (whitespace ignored).
ColoredGaussDiagram parse_colored_diagram(std::string_view text);
std::string format_colored_diagram(const ColoredGaussDiagram& d);
bool looks_colored(std::string_view text);

// Places d2 to the right of d1, joining d1's right height h to d2's left
// height h. Throws ValidationError naming the first height whose colors differ.
ColoredGaussDiagram concat(const ColoredGaussDiagram& d1, const ColoredGaussDiagram& d2);

// Single-line colored diagram with the same arrows as d.
ColoredGaussDiagram as_colored(const GaussDiagram& d);

ColoredGaussDiagram random_colored_diagram(int line_count, int arrow_count, std::uint64_t seed);

struct MultiInvariant {
    std::vector<int> permutation;
    std::vector<int> colors;
    // words[j]: right end generator of line j as a word in the left end
    // generators a_c (letter family c = color), indices in Z^{n+1}.
    std::vector<Word> words;

    friend bool operator==(const MultiInvariant&, const MultiInvariant&) = default;
};

MultiInvariant phi_multi(const ColoredGaussDiagram& d);

// Invariant of "first, then second". Throws ValidationError naming the
// height where a joined pair of components has different colors.
MultiInvariant compose_multi(const MultiInvariant& first, const MultiInvariant& second);
MultiInvariant compose_multi(const MultiInvariant& first, const MultiInvariant& second,
                             std::span<const int> colors1, std::span<const int> colors2);

// Homotopy moves lifted to several lines. Deletions and slides name the
// first endpoint of each adjacent pair in traversal order; insertions name
// gaps (slot = number of endpoints to the left on that line). H1 always
// acts within one line; H2 and H3 pairs may sit on different lines.
struct ColoredMove {
    MoveKind kind = MoveKind::H1;
    MoveDirection direction = MoveDirection::Delete;
    std::vector<Endpoint> sites;
    bool tail_first = true;
    bool crossed = false;
};

std::vector<ColoredMove> enumerate_colored_moves(const ColoredGaussDiagram& d);
std::vector<ColoredMove> enumerate_colored_insertions(const ColoredGaussDiagram& d);
ColoredGaussDiagram apply_colored_move(const ColoredGaussDiagram& d, const ColoredMove& mv);
ColoredMove inverse_colored_move(const ColoredGaussDiagram& d, const ColoredMove& mv);

nlohmann::json to_json(const ColoredGaussDiagram& d);
nlohmann::json to_json(const MultiInvariant& inv);

}  // namespace vstring
