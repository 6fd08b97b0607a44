#include "vstring/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include <nlohmann/json.hpp>

#include "random_util.hpp"
#include "vstring/error.hpp"

namespace vstring {

namespace {

void canonicalize(std::vector<Arrow>& arrows) {
    std::sort(arrows.begin(), arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.over() < b.over(); });
}

struct Token {
    std::string text;
    std::size_t offset;
};

// Splits on commas after dropping whitespace; offsets refer to the raw input.
std::vector<Token> split_tokens(std::string_view text) {
    std::vector<Token> tokens;
    bool any = false;
    Token current{"", 0};
    bool started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        any = true;
        if (c == ',') {
            if (!started) current.offset = i;
            tokens.push_back(current);
            current = Token{"", 0};
            started = false;
            continue;
        }
        if (!started) {
            current.offset = i;
            started = true;
        }
        current.text.push_back(c);
    }
    if (any) tokens.push_back(current);
    return tokens;
}

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

GaussDiagram::GaussDiagram(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {
    const int n = endpoint_count();
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto claim = [&](int p) {
        if (p < 1 || p > n) {
            throw ValidationError("position " + std::to_string(p) + " out of range 1.." + std::to_string(n));
        }
        if (used[p]) throw ValidationError("duplicate position " + std::to_string(p));
        used[p] = true;
    };
    for (const Arrow& a : arrows_) {
        if (a.tail == a.head) throw ValidationError("arrow " + std::to_string(a.tail) + ">" + std::to_string(a.head) + " has tail = head");
        claim(a.tail);
        claim(a.head);
    }
    canonicalize(arrows_);
}

GaussDiagram parse_diagram(std::string_view text) {
    std::vector<Arrow> arrows;
    std::vector<std::size_t> offsets;
    for (const Token& tok : split_tokens(text)) {
        const auto gt = tok.text.find('>');
        Arrow a;
        if (gt == std::string::npos ||
            !parse_int(std::string_view(tok.text).substr(0, gt), a.tail) ||
            !parse_int(std::string_view(tok.text).substr(gt + 1), a.head)) {
            throw ParseError("malformed token, expected s>t", tok.text, tok.offset);
        }
        arrows.push_back(a);
        offsets.push_back(tok.offset);
    }

    // Validate here as well so errors can point at the token.
    const int n = static_cast<int>(2 * arrows.size());
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = arrows[i];
        const std::string tok = std::to_string(a.tail) + ">" + std::to_string(a.head);
        if (a.tail == a.head) throw ParseError("tail equals head", tok, offsets[i]);
        for (int p : {a.tail, a.head}) {
            if (p < 1 || p > n) {
                throw ParseError("position " + std::to_string(p) + " out of range 1.." + std::to_string(n), tok, offsets[i]);
            }
            if (used[p]) throw ParseError("duplicate position " + std::to_string(p), tok, offsets[i]);
            used[p] = true;
        }
    }
    return GaussDiagram(std::move(arrows));
}

std::string format_diagram(const GaussDiagram& d) {
    std::string out;
    for (const Arrow& a : d.arrows()) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(a.tail);
        out.push_back('>');
        out += std::to_string(a.head);
    }
    return out;
}

GaussDiagram concat(const GaussDiagram& d1, const GaussDiagram& d2) {
    std::vector<Arrow> arrows(d1.arrows().begin(), d1.arrows().end());
    const int offset = d1.endpoint_count();
    for (const Arrow& a : d2.arrows()) arrows.push_back({a.tail + offset, a.head + offset});
    return GaussDiagram(std::move(arrows));
}

GaussDiagram star(const GaussDiagram& d) {
    std::vector<Arrow> arrows;
    arrows.reserve(d.arrow_count());
    for (const Arrow& a : d.arrows()) arrows.push_back({a.head, a.tail});
    return GaussDiagram(std::move(arrows));
}

GaussDiagram hat(const GaussDiagram& d) {
    const int mirror = d.endpoint_count() + 1;
    std::vector<Arrow> arrows;
    arrows.reserve(d.arrow_count());
    for (const Arrow& a : d.arrows()) arrows.push_back({mirror - a.head, mirror - a.tail});
    return GaussDiagram(std::move(arrows));
}

bool is_ribbon_presentation(const GaussDiagram& d) { return hat(d) == d; }

int writhe(const GaussDiagram& d) {
    return std::accumulate(d.arrows().begin(), d.arrows().end(), 0,
                           [](int acc, const Arrow& a) { return acc + static_cast<int>(a.sign()); });
}

GaussDiagram random_diagram(int arrow_count, std::uint64_t seed) {
    if (arrow_count < 0) throw ValidationError("arrow count must be non-negative, got " + std::to_string(arrow_count));
    std::mt19937_64 rng(seed);
    std::vector<int> positions(static_cast<std::size_t>(2 * arrow_count));
    std::iota(positions.begin(), positions.end(), 1);
    detail::shuffle(positions.begin(), positions.end(), rng);
    std::vector<Arrow> arrows;
    arrows.reserve(static_cast<std::size_t>(arrow_count));
    for (std::size_t i = 0; i < positions.size(); i += 2) {
        Arrow a{positions[i], positions[i + 1]};
        if (detail::draw_bit(rng)) std::swap(a.tail, a.head);
        arrows.push_back(a);
    }
    return GaussDiagram(std::move(arrows));
}

nlohmann::json to_json(const GaussDiagram& d) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const Arrow& a : d.arrows()) arrows.push_back({a.tail, a.head});
    return {{"m", d.arrow_count()}, {"arrows", std::move(arrows)}};
}

GaussDiagram diagram_from_json(const nlohmann::json& j) {
    std::vector<Arrow> arrows;
    try {
        for (const auto& pair : j.at("arrows")) {
            if (!pair.is_array() || pair.size() != 2) throw ValidationError("arrow entries must be [tail, head]");
            arrows.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        if (j.contains("m") && j.at("m").get<std::size_t>() != arrows.size()) {
            throw ValidationError("field m disagrees with the number of arrows");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed diagram document: ") + e.what());
    }
    return GaussDiagram(std::move(arrows));
}

}  // namespace vstring
