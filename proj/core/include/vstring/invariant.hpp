#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vstring/gauss_diagram.hpp"
#include "vstring/laurent.hpp"
#include "vstring/word.hpp"

namespace vstring {

// Image of the left end generator a = a_(0,0) under the endomorphism
// attached to an open string: the right end generator written as a reduced
// word in the shifts of a.
struct StringInvariant {
    Word word = Word::generator(ExponentIndex{0, 0});

    static StringInvariant identity() { return {}; }
    friend bool operator==(const StringInvariant&, const StringInvariant&) = default;
};

// One left-to-right sweep over the descending resolution of d.
StringInvariant phi(const GaussDiagram& d);

// Invariant of the product "first, then second": substitute shifts of
// first.word for the letters of second.word.
StringInvariant compose(const StringInvariant& first, const StringInvariant& second);

struct CommuteResult {
    bool commute = true;
    Word forward;   // phi(d1 . d2)
    Word backward;  // phi(d2 . d1)
};

CommuteResult commute_check(const GaussDiagram& d1, const GaussDiagram& d2);

// Exponent-sum polynomial computed directly from the weighted Gauss
// diagram by dynamic programming over segments. Equals abelianize(phi(d).word).
LaurentPolynomial phi_poly(const GaussDiagram& d);

// A left-to-right path through the weighted diagram and its weights in
// traversal order. Debugging aid; the count grows exponentially.
struct WeightedPath {
    std::vector<int> jumps;  // arrows taken, by index into d.arrows()
    std::vector<LaurentPolynomial> factors;

    LaurentPolynomial product() const;
};

std::vector<WeightedPath> enumerate_weighted_paths(const GaussDiagram& d);

// Decomposition word = W . a^{(uv)^-writhe} . shift(invert(W), (1,1)).
struct NormalForm {
    Word prefix;
    std::int64_t writhe = 0;
};

// Throws NormalFormError when the word does not have that shape.
NormalForm normal_form(const StringInvariant& inv);

enum class Obstruction { Abelian, Full };

using Witness = std::variant<LaurentPolynomial, Word>;

// Outcome of a ribbon obstruction. Both obstructions are necessary
// conditions only: a failed check certifies that the string is not ribbon,
// a passed check proves nothing.
struct RibbonVerdict {
    Obstruction obstruction = Obstruction::Abelian;
    bool obstruction_passed = true;
    Witness lhs;  // phi(u,v) or Phi(alpha)
    Witness rhs;  // phi(v,u) or Phi(hat alpha)

    bool certifies_not_ribbon() const noexcept { return !obstruction_passed; }
};

// phi(u,v) == phi(v,u)
RibbonVerdict ribbon_obstruction_abelian(const GaussDiagram& d);
// Phi(d) == Phi(hat(d))
RibbonVerdict ribbon_obstruction_full(const GaussDiagram& d);

std::string to_string(Obstruction o);
std::string witness_string(const Witness& w);

// {"obstruction", "passed", "lhs", "rhs"}
nlohmann::json to_json(const RibbonVerdict& v);

}  // namespace vstring
