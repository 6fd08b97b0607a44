#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace vstring {

enum class ArrowSign : int { Negative = -1, Positive = 1 };

// One uncircled double point: the strand near `tail` crosses the strand
// near `head` from left to right. Positions are 1-based.
struct Arrow {
    int tail = 0;
    int head = 0;

    // Sign of the crossing in the descending resolution: the earlier
    // endpoint is traversed first and becomes the overcrossing.
    ArrowSign sign() const noexcept { return tail < head ? ArrowSign::Positive : ArrowSign::Negative; }
    int over() const noexcept { return tail < head ? tail : head; }
    int under() const noexcept { return tail < head ? head : tail; }

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Gauss diagram of an open virtual string: 2m points on an oriented line
// paired into m arrows. Always valid and canonical (arrows sorted by
// their smaller endpoint), so == is structural equality.
class GaussDiagram {
public:
    GaussDiagram() = default;

    // Throws ValidationError unless the endpoints are exactly {1..2m} and
    // no arrow is a loop.
    explicit GaussDiagram(std::vector<Arrow> arrows);

    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    int endpoint_count() const noexcept { return static_cast<int>(2 * arrows_.size()); }
    bool empty() const noexcept { return arrows_.empty(); }
    std::span<const Arrow> arrows() const noexcept { return arrows_; }

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<Arrow> arrows_;
};

// Comma separated `s>t` tokens; whitespace is ignored; "" is the trivial string.
GaussDiagram parse_diagram(std::string_view text);
std::string format_diagram(const GaussDiagram& d);

// Product in the concatenation semigroup: d2 is placed to the right of d1.
GaussDiagram concat(const GaussDiagram& d1, const GaussDiagram& d2);

// Reverse every arrow (reflection of the plane curve in a line).
GaussDiagram star(const GaussDiagram& d);

// Reflect the line about its midpoint and reverse every arrow:
// (s,t) -> (2m+1-t, 2m+1-s).
GaussDiagram hat(const GaussDiagram& d);

// True iff the diagram is fixed by hat, i.e. it is itself a ribbon presentation.
bool is_ribbon_presentation(const GaussDiagram& d);

int writhe(const GaussDiagram& d);

// Uniformly random directed pairing of 1..2m, reproducible from `seed`.
GaussDiagram random_diagram(int arrow_count, std::uint64_t seed);

// {"m": m, "arrows": [[tail, head], ...]}
nlohmann::json to_json(const GaussDiagram& d);
GaussDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace vstring
