#include "vstring/invariant.hpp"

#include <nlohmann/json.hpp>

#include "vstring/error.hpp"

namespace vstring {

namespace {

struct EndpointRole {
    int arrow = -1;
    bool over = false;
    bool positive = false;
};

std::vector<EndpointRole> roles(const GaussDiagram& d) {
    std::vector<EndpointRole> out(static_cast<std::size_t>(d.endpoint_count()) + 1);
    int k = 0;
    for (const Arrow& a : d.arrows()) {
        const bool positive = a.sign() == ArrowSign::Positive;
        out[a.over()] = {k, true, positive};
        out[a.under()] = {k, false, positive};
        ++k;
    }
    return out;
}

const ExponentIndex kUp{0, 1};
const ExponentIndex kDown{0, -1};
const ExponentIndex kLeft{-1, 0};
const ExponentIndex kRight{1, 0};
const ExponentIndex kDiagDown{-1, -1};
const ExponentIndex kDiagUp{1, 1};

LaurentPolynomial mono(std::int64_t j, std::int64_t k) { return LaurentPolynomial::monomial(ExponentIndex{j, k}); }

// Weight of the segment step through an endpoint.
LaurentPolynomial step_weight(const EndpointRole& r) {
    if (r.over) return r.positive ? mono(0, -1) : mono(0, 1);
    return r.positive ? mono(-1, 0) : mono(1, 0);
}

// Weight of the jump along an arrow.
LaurentPolynomial jump_weight(bool positive) {
    return positive ? mono(0, 0) - mono(-1, -1) : mono(0, 0) - mono(1, 1);
}

}  // namespace

StringInvariant phi(const GaussDiagram& d) {
    const auto role = roles(d);
    // Word on the segment entering each arrow's over endpoint.
    std::vector<Word> over_in(d.arrow_count(), Word(2));
    Word current = Word::generator(ExponentIndex{0, 0});

    for (int p = 1; p <= d.endpoint_count(); ++p) {
        const EndpointRole& r = role[p];
        if (r.over) {
            over_in[r.arrow] = current;
            current = shift(current, r.positive ? kDown : kUp);
            continue;
        }
        const Word& b = over_in[r.arrow];
        Word next(2);
        if (r.positive) {
            next.append(invert(shift(b, kDiagDown)));
            next.append(shift(current, kLeft));
            next.append(b);
        } else {
            next.append(b);
            next.append(shift(current, kRight));
            next.append(invert(shift(b, kDiagUp)));
        }
        current = std::move(next);
    }
    return StringInvariant{std::move(current)};
}

StringInvariant compose(const StringInvariant& first, const StringInvariant& second) {
    const Word images[] = {first.word};
    return StringInvariant{substitute(second.word, images)};
}

CommuteResult commute_check(const GaussDiagram& d1, const GaussDiagram& d2) {
    const auto i1 = phi(d1);
    const auto i2 = phi(d2);
    CommuteResult r;
    r.forward = compose(i1, i2).word;
    r.backward = compose(i2, i1).word;
    r.commute = r.forward == r.backward;
    return r;
}

LaurentPolynomial phi_poly(const GaussDiagram& d) {
    const auto role = roles(d);
    const int n = d.endpoint_count();
    std::vector<LaurentPolynomial> landing(static_cast<std::size_t>(n) + 1, LaurentPolynomial(2));
    LaurentPolynomial segment = LaurentPolynomial::constant(2, 1);

    for (int p = 1; p <= n; ++p) {
        const EndpointRole& r = role[p];
        if (r.over) {
            const Arrow& a = d.arrows()[r.arrow];
            landing[a.under()] += jump_weight(r.positive) * segment;
        }
        segment = step_weight(r) * segment + landing[p];
    }
    return segment;
}

LaurentPolynomial WeightedPath::product() const {
    LaurentPolynomial out = LaurentPolynomial::constant(2, 1);
    for (const auto& f : factors) out = out * f;
    return out;
}

std::vector<WeightedPath> enumerate_weighted_paths(const GaussDiagram& d) {
    const auto role = roles(d);
    const int n = d.endpoint_count();
    std::vector<WeightedPath> out;
    WeightedPath path;

    auto walk = [&](auto&& self, int segment) -> void {
        if (segment == n) {
            out.push_back(path);
            return;
        }
        const EndpointRole& r = role[segment + 1];
        path.factors.push_back(step_weight(r));
        self(self, segment + 1);
        path.factors.pop_back();
        if (r.over) {
            path.factors.push_back(jump_weight(r.positive));
            path.jumps.push_back(r.arrow);
            self(self, d.arrows()[r.arrow].under());
            path.jumps.pop_back();
            path.factors.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

NormalForm normal_form(const StringInvariant& inv) {
    const auto letters = inv.word.letters();
    if (inv.word.dimension() != 2) throw NormalFormError("normal form needs a single-string word");
    if (letters.size() % 2 == 0) {
        throw NormalFormError("word has even length " + std::to_string(letters.size()));
    }
    const std::size_t r = letters.size() / 2;
    const Letter& middle = letters[r];
    if (middle.sign != 1 || middle.generator != 1 || middle.index[0] != middle.index[1]) {
        throw NormalFormError("middle letter " + format_word(Word(2, {middle})) + " is not a^{(uv)^-w}");
    }
    for (std::size_t i = 1; i <= r; ++i) {
        Letter mirrored = letters[r - i].inverse();
        mirrored.index += kDiagUp;
        if (!(letters[r + i] == mirrored)) {
            throw NormalFormError("letter " + std::to_string(r + i + 1) + " does not mirror letter " +
                                  std::to_string(r - i + 1));
        }
    }
    NormalForm nf;
    nf.prefix = Word(2, std::vector<Letter>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r)));
    nf.writhe = -middle.index[0];
    return nf;
}

RibbonVerdict ribbon_obstruction_abelian(const GaussDiagram& d) {
    auto p = phi_poly(d);
    auto q = swap_uv(p);
    RibbonVerdict v;
    v.obstruction = Obstruction::Abelian;
    v.obstruction_passed = p == q;
    v.lhs = std::move(p);
    v.rhs = std::move(q);
    return v;
}

RibbonVerdict ribbon_obstruction_full(const GaussDiagram& d) {
    auto w = phi(d).word;
    auto w_hat = phi(hat(d)).word;
    RibbonVerdict v;
    v.obstruction = Obstruction::Full;
    v.obstruction_passed = w == w_hat;
    v.lhs = std::move(w);
    v.rhs = std::move(w_hat);
    return v;
}

std::string to_string(Obstruction o) { return o == Obstruction::Abelian ? "abelian" : "full"; }

std::string witness_string(const Witness& w) {
    if (const auto* p = std::get_if<LaurentPolynomial>(&w)) return canonical_string(*p);
    return format_word(std::get<Word>(w));
}

nlohmann::json to_json(const RibbonVerdict& v) {
    return {{"obstruction", to_string(v.obstruction)},
            {"passed", v.obstruction_passed},
            {"lhs", witness_string(v.lhs)},
            {"rhs", witness_string(v.rhs)}};
}

}  // namespace vstring
