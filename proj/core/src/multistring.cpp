#include "vstring/multistring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include <nlohmann/json.hpp>

#include "random_util.hpp"
#include "strands.hpp"
#include "vstring/error.hpp"

namespace vstring {

namespace {

void require_permutation(std::span<const int> values, int n, const char* what) {
    if (static_cast<int>(values.size()) != n) {
        throw ValidationError(std::string(what) + " must list " + std::to_string(n) + " entries");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[v]) throw ValidationError(std::string(what) + " must be a permutation of 1.." + std::to_string(n));
        seen[v] = true;
    }
}

std::string endpoint_string(Endpoint e) { return "L" + std::to_string(e.line) + "." + std::to_string(e.slot); }

}  // namespace

ColoredGaussDiagram::ColoredGaussDiagram(int line_count, std::vector<int> colors, std::vector<int> permutation,
                                         std::vector<ColoredArrow> arrows)
    : colors_(std::move(colors)), permutation_(std::move(permutation)), arrows_(std::move(arrows)) {
    if (line_count < 1) throw ValidationError("an n-string needs at least one line");
    require_permutation(colors_, line_count, "colors");
    require_permutation(permutation_, line_count, "permutation");

    slots_.assign(static_cast<std::size_t>(line_count), 0);
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(line_count));
    auto claim = [&](Endpoint e) {
        if (e.line < 1 || e.line > line_count) throw ValidationError("line out of range in " + endpoint_string(e));
        if (e.slot < 1) throw ValidationError("slot out of range in " + endpoint_string(e));
        auto& u = used[e.line - 1];
        if (static_cast<int>(u.size()) < e.slot) u.resize(static_cast<std::size_t>(e.slot), false);
        if (u[e.slot - 1]) throw ValidationError("duplicate endpoint " + endpoint_string(e));
        u[e.slot - 1] = true;
    };
    for (const auto& a : arrows_) {
        if (a.tail == a.head) throw ValidationError("arrow at " + endpoint_string(a.tail) + " has tail = head");
        claim(a.tail);
        claim(a.head);
    }
    for (int l = 0; l < line_count; ++l) {
        const auto& u = used[l];
        for (std::size_t s = 0; s < u.size(); ++s) {
            if (!u[s]) throw ValidationError("missing endpoint " + endpoint_string({l + 1, static_cast<int>(s) + 1}));
        }
        slots_[l] = static_cast<int>(u.size());
    }
    std::sort(arrows_.begin(), arrows_.end(), [](const ColoredArrow& a, const ColoredArrow& b) {
        return std::min(a.tail, a.head) < std::min(b.tail, b.head);
    });
}

ColoredGaussDiagram ColoredGaussDiagram::trivial(int line_count) {
    std::vector<int> id(static_cast<std::size_t>(std::max(line_count, 0)));
    std::iota(id.begin(), id.end(), 1);
    return ColoredGaussDiagram(line_count, id, id, {});
}

std::vector<int> ColoredGaussDiagram::traversal_order() const {
    std::vector<int> order(colors_.size());
    for (std::size_t l = 0; l < colors_.size(); ++l) order[colors_[l] - 1] = static_cast<int>(l) + 1;
    return order;
}

bool ColoredGaussDiagram::before(Endpoint a, Endpoint b) const {
    const int ca = color_of(a.line);
    const int cb = color_of(b.line);
    return ca != cb ? ca < cb : a.slot < b.slot;
}

// ---------------------------------------------------------------------------
// Text and JSON forms

bool looks_colored(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == 'n';
    }
    return false;
}

namespace {

struct Compact {
    std::string text;
    std::vector<std::size_t> offset;  // raw offset of each kept character
};

Compact strip_spaces(std::string_view raw) {
    Compact c;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(raw[i]))) continue;
        c.text.push_back(raw[i]);
        c.offset.push_back(i);
    }
    return c;
}

bool to_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view s, char sep, std::size_t base) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t start = 0;
    while (true) {
        const auto at = s.find(sep, start);
        if (at == std::string_view::npos) {
            out.emplace_back(s.substr(start), base + start);
            return out;
        }
        out.emplace_back(s.substr(start, at - start), base + start);
        start = at + 1;
    }
}

}  // namespace

ColoredGaussDiagram parse_colored_diagram(std::string_view raw) {
    const Compact c = strip_spaces(raw);
    auto raw_offset = [&](std::size_t i) { return i < c.offset.size() ? c.offset[i] : raw.size(); };
    auto fail = [&](const std::string& msg, std::string_view tok, std::size_t at) -> void {
        throw ParseError(msg, std::string(tok), raw_offset(at));
    };

    const auto sections = split(c.text, ';', 0);
    if (sections.size() < 3 || sections.size() > 4) {
        fail("expected 'n=..; colors=..; perm=..;' followed by arrows", c.text.substr(0, 16), 0);
    }
    auto field = [&](std::size_t i, std::string_view key) {
        const auto [body, at] = sections[i];
        if (body.substr(0, key.size()) != key) fail("expected field " + std::string(key), body, at);
        return std::pair{body.substr(key.size()), at + key.size()};
    };
    auto int_list = [&](std::pair<std::string_view, std::size_t> f) {
        std::vector<int> out;
        for (auto [tok, at] : split(f.first, ',', f.second)) {
            int v = 0;
            if (!to_int(tok, v)) fail("expected an integer", tok, at);
            out.push_back(v);
        }
        return out;
    };

    int n = 0;
    {
        const auto [body, at] = field(0, "n=");
        if (!to_int(body, n) || n < 1) fail("line count must be a positive integer", body, at);
    }
    std::vector<int> colors = int_list(field(1, "colors="));
    std::vector<int> perm = int_list(field(2, "perm="));

    std::vector<ColoredArrow> arrows;
    if (sections.size() == 4 && !sections[3].first.empty()) {
        auto endpoint = [&](std::string_view tok, std::size_t at) {
            Endpoint e;
            const auto dot = tok.find('.');
            if (tok.size() < 4 || tok[0] != 'L' || dot == std::string_view::npos ||
                !to_int(tok.substr(1, dot - 1), e.line) || !to_int(tok.substr(dot + 1), e.slot)) {
                fail("malformed endpoint, expected L<line>.<slot>", tok, at);
            }
            return e;
        };
        for (auto [tok, at] : split(sections[3].first, ',', sections[3].second)) {
            const auto gt = tok.find('>');
            if (gt == std::string_view::npos) fail("malformed arrow, expected L<i>.<s> > L<j>.<t>", tok, at);
            arrows.push_back({endpoint(tok.substr(0, gt), at), endpoint(tok.substr(gt + 1), at + gt + 1)});
        }
    }
    try {
        return ColoredGaussDiagram(n, std::move(colors), std::move(perm), std::move(arrows));
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), std::string(raw), 0);
    }
}

std::string format_colored_diagram(const ColoredGaussDiagram& d) {
    auto list = [](std::span<const int> xs) {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(xs[i]);
        }
        return out;
    };
    std::string out = "n=" + std::to_string(d.line_count()) + "; colors=" + list(d.colors()) +
                      "; perm=" + list(d.permutation()) + ";";
    bool first = true;
    for (const auto& a : d.arrows()) {
        out += first ? " " : ", ";
        first = false;
        out += endpoint_string(a.tail) + " > " + endpoint_string(a.head);
    }
    return out;
}

nlohmann::json to_json(const ColoredGaussDiagram& d) {
    nlohmann::json slots = nlohmann::json::array();
    for (int l = 1; l <= d.line_count(); ++l) slots.push_back(d.slot_count(l));
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : d.arrows()) {
        arrows.push_back({{a.tail.line, a.tail.slot}, {a.head.line, a.head.slot}});
    }
    return {{"n", d.line_count()},
            {"colors", std::vector<int>(d.colors().begin(), d.colors().end())},
            {"perm", std::vector<int>(d.permutation().begin(), d.permutation().end())},
            {"slots", std::move(slots)},
            {"arrows", std::move(arrows)}};
}

nlohmann::json to_json(const MultiInvariant& inv) {
    nlohmann::json words = nlohmann::json::array();
    for (const auto& w : inv.words) words.push_back(format_word(w));
    return {{"permutation", inv.permutation}, {"colors", inv.colors}, {"words", std::move(words)}};
}

// ---------------------------------------------------------------------------
// Construction

ColoredGaussDiagram concat(const ColoredGaussDiagram& d1, const ColoredGaussDiagram& d2) {
    const int n = d1.line_count();
    if (d2.line_count() != n) throw ValidationError("cannot concatenate strings with different line counts");
    // from_height[h-1]: the d1 line arriving at right height h.
    std::vector<int> from_height(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) from_height[d1.permutation()[j - 1] - 1] = j;
    for (int h = 1; h <= n; ++h) {
        if (d1.color_of(from_height[h - 1]) != d2.color_of(h)) {
            throw ValidationError("color mismatch at height " + std::to_string(h));
        }
    }
    std::vector<ColoredArrow> arrows(d1.arrows().begin(), d1.arrows().end());
    auto lift = [&](Endpoint e) {
        const int j = from_height[e.line - 1];
        return Endpoint{j, e.slot + d1.slot_count(j)};
    };
    for (const auto& a : d2.arrows()) arrows.push_back({lift(a.tail), lift(a.head)});
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) perm[j - 1] = d2.permutation()[d1.permutation()[j - 1] - 1];
    return ColoredGaussDiagram(n, std::vector<int>(d1.colors().begin(), d1.colors().end()), std::move(perm),
                               std::move(arrows));
}

ColoredGaussDiagram as_colored(const GaussDiagram& d) {
    std::vector<ColoredArrow> arrows;
    for (const Arrow& a : d.arrows()) arrows.push_back({{1, a.tail}, {1, a.head}});
    return ColoredGaussDiagram(1, {1}, {1}, std::move(arrows));
}

ColoredGaussDiagram random_colored_diagram(int line_count, int arrow_count, std::uint64_t seed) {
    if (line_count < 1) throw ValidationError("line count must be positive");
    if (arrow_count < 0) throw ValidationError("arrow count must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<int> colors(static_cast<std::size_t>(line_count));
    std::iota(colors.begin(), colors.end(), 1);
    std::vector<int> perm = colors;
    detail::shuffle(colors.begin(), colors.end(), rng);
    detail::shuffle(perm.begin(), perm.end(), rng);

    std::vector<int> slots(static_cast<std::size_t>(line_count), 0);
    std::vector<Endpoint> ends;
    for (int i = 0; i < 2 * arrow_count; ++i) {
        const int line = static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(line_count))) + 1;
        ends.push_back({line, ++slots[line - 1]});
    }
    detail::shuffle(ends.begin(), ends.end(), rng);
    std::vector<ColoredArrow> arrows;
    for (std::size_t i = 0; i < ends.size(); i += 2) {
        ColoredArrow a{ends[i], ends[i + 1]};
        if (detail::draw_bit(rng)) std::swap(a.tail, a.head);
        arrows.push_back(a);
    }
    return ColoredGaussDiagram(line_count, std::move(colors), std::move(perm), std::move(arrows));
}

// ---------------------------------------------------------------------------
// Invariant

namespace {

// The one place that decides which variables a crossing shifts by. The
// under strand's incoming word moves by u_i (i = over color); the over
// strand's word, conjugating it, moves by u_j + v (j = under color). Any
// choice that uses a single color for both breaks the triangle move.
struct CrossingShifts {
    ExponentIndex v;        // step along the over strand
    ExponentIndex u_over;   // u_i, applied to the under strand's word
    ExponentIndex u_under;  // u_j, applied to the over strand's word
};

CrossingShifts crossing_shifts(std::size_t dim, int over_color, int under_color) {
    return {ExponentIndex::unit(dim, dim - 1, 1), ExponentIndex::unit(dim, static_cast<std::size_t>(over_color - 1), 1),
            ExponentIndex::unit(dim, static_cast<std::size_t>(under_color - 1), 1)};
}

}  // namespace

MultiInvariant phi_multi(const ColoredGaussDiagram& d) {
    const int n = d.line_count();
    const std::size_t dim = static_cast<std::size_t>(n) + 1;

    // Arrow incident to each endpoint.
    std::vector<std::vector<int>> arrow_at(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) arrow_at[l - 1].assign(static_cast<std::size_t>(d.slot_count(l)), -1);
    for (std::size_t k = 0; k < d.arrows().size(); ++k) {
        const auto& a = d.arrows()[k];
        arrow_at[a.tail.line - 1][a.tail.slot - 1] = static_cast<int>(k);
        arrow_at[a.head.line - 1][a.head.slot - 1] = static_cast<int>(k);
    }

    std::vector<Word> over_in(d.arrows().size(), Word(dim));
    MultiInvariant out;
    out.permutation.assign(d.permutation().begin(), d.permutation().end());
    out.colors.assign(d.colors().begin(), d.colors().end());
    out.words.assign(static_cast<std::size_t>(n), Word(dim));

    for (int line : d.traversal_order()) {
        Word current = Word::generator(ExponentIndex::zero(dim), d.color_of(line));
        for (int s = 1; s <= d.slot_count(line); ++s) {
            const Endpoint here{line, s};
            const auto& a = d.arrows()[arrow_at[line - 1][s - 1]];
            const Endpoint over = d.before(a.tail, a.head) ? a.tail : a.head;
            const bool positive = over == a.tail;
            const int k = arrow_at[line - 1][s - 1];
            const Endpoint under = over == a.tail ? a.head : a.tail;
            const auto sh = crossing_shifts(dim, d.color_of(over.line), d.color_of(under.line));
            if (here == over) {
                over_in[k] = current;
                current = shift(current, positive ? -sh.v : sh.v);
                continue;
            }
            const Word& b = over_in[k];
            Word next(dim);
            if (positive) {
                next.append(invert(shift(b, -(sh.u_under + sh.v))));
                next.append(shift(current, -sh.u_over));
                next.append(b);
            } else {
                next.append(shift(b, sh.u_over - sh.u_under));
                next.append(shift(current, sh.u_over));
                next.append(invert(shift(b, sh.u_over + sh.v)));
            }
            current = std::move(next);
        }
        out.words[line - 1] = std::move(current);
    }
    return out;
}

MultiInvariant compose_multi(const MultiInvariant& first, const MultiInvariant& second) {
    const std::size_t n = first.words.size();
    if (second.words.size() != n) throw ValidationError("cannot compose invariants with different line counts");
    std::vector<std::size_t> from_height(n);
    for (std::size_t j = 0; j < n; ++j) from_height[first.permutation[j] - 1] = j;
    for (std::size_t h = 0; h < n; ++h) {
        if (first.colors[from_height[h]] != second.colors[h]) {
            throw ValidationError("color mismatch at height " + std::to_string(h + 1));
        }
    }
    std::vector<Word> images(n, Word(n + 1));
    for (std::size_t j = 0; j < n; ++j) images[first.colors[j] - 1] = first.words[j];
    MultiInvariant out;
    out.colors = first.colors;
    out.permutation.resize(n);
    out.words.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const int h = first.permutation[j];
        out.permutation[j] = second.permutation[h - 1];
        out.words.push_back(substitute(second.words[h - 1], images));
    }
    return out;
}

MultiInvariant compose_multi(const MultiInvariant& first, const MultiInvariant& second, std::span<const int> colors1,
                             std::span<const int> colors2) {
    MultiInvariant a = first;
    MultiInvariant b = second;
    a.colors.assign(colors1.begin(), colors1.end());
    b.colors.assign(colors2.begin(), colors2.end());
    return compose_multi(a, b);
}

// ---------------------------------------------------------------------------
// Moves

namespace {

detail::Strands to_strands(const ColoredGaussDiagram& d) {
    detail::Strands s;
    const int n = d.line_count();
    s.lines.resize(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) s.lines[l - 1].resize(static_cast<std::size_t>(d.slot_count(l)));
    s.rank.resize(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) s.rank[l - 1] = d.color_of(l) - 1;
    s.arrow_count = static_cast<int>(d.arrows().size());
    int id = 0;
    for (const auto& a : d.arrows()) {
        s.lines[a.tail.line - 1][a.tail.slot - 1] = {id, true};
        s.lines[a.head.line - 1][a.head.slot - 1] = {id, false};
        ++id;
    }
    return s;
}

ColoredGaussDiagram from_strands(const ColoredGaussDiagram& like, const detail::Strands& s) {
    std::vector<ColoredArrow> arrows(static_cast<std::size_t>(s.arrow_count));
    for (int l = 0; l < static_cast<int>(s.lines.size()); ++l) {
        for (int i = 0; i < static_cast<int>(s.lines[l].size()); ++i) {
            const auto& tok = s.lines[l][i];
            (tok.is_tail ? arrows[tok.arrow].tail : arrows[tok.arrow].head) = Endpoint{l + 1, i + 1};
        }
    }
    return ColoredGaussDiagram(like.line_count(), std::vector<int>(like.colors().begin(), like.colors().end()),
                               std::vector<int>(like.permutation().begin(), like.permutation().end()),
                               std::move(arrows));
}

detail::GenericMove to_generic(const ColoredMove& mv) {
    detail::GenericMove g{mv.kind, mv.direction, {}, mv.tail_first, mv.crossed};
    for (const auto& e : mv.sites) g.sites.push_back({e.line - 1, e.slot});
    return g;
}

ColoredMove from_generic(const detail::GenericMove& g) {
    ColoredMove mv{g.kind, g.direction, {}, g.tail_first, g.crossed};
    for (const auto& s : g.sites) mv.sites.push_back({s.line + 1, s.index});
    return mv;
}

}  // namespace

std::vector<ColoredMove> enumerate_colored_moves(const ColoredGaussDiagram& d) {
    std::vector<ColoredMove> out;
    for (const auto& g : detail::enumerate_moves(to_strands(d))) out.push_back(from_generic(g));
    return out;
}

std::vector<ColoredMove> enumerate_colored_insertions(const ColoredGaussDiagram& d) {
    std::vector<ColoredMove> out;
    for (const auto& g : detail::enumerate_insertions(to_strands(d))) out.push_back(from_generic(g));
    return out;
}

ColoredGaussDiagram apply_colored_move(const ColoredGaussDiagram& d, const ColoredMove& mv) {
    return from_strands(d, detail::apply_move(to_strands(d), to_generic(mv)));
}

ColoredMove inverse_colored_move(const ColoredGaussDiagram& d, const ColoredMove& mv) {
    return from_generic(detail::inverse_move(to_strands(d), to_generic(mv)));
}

}  // namespace vstring
