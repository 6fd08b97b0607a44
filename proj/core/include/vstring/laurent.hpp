#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "vstring/exponent_index.hpp"

namespace vstring {

using Integer = boost::multiprecision::cpp_int;

// Orders exponent vectors lexicographically starting from the LAST
// coordinate (the v exponent), which is the printing order.
struct TermOrder {
    bool operator()(const ExponentIndex& a, const ExponentIndex& b) const {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

// Sparse Laurent polynomial with integer coefficients in d variables
// (u, v for d = 2; u1..u{d-1}, v otherwise). No zero coefficient is stored.
class LaurentPolynomial {
public:
    using Terms = std::map<ExponentIndex, Integer, TermOrder>;

    explicit LaurentPolynomial(std::size_t dimension = 2) : dim_(dimension) {}

    static LaurentPolynomial constant(std::size_t dimension, const Integer& c);
    static LaurentPolynomial monomial(const ExponentIndex& e, const Integer& c = 1);

    std::size_t dimension() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const ExponentIndex& e) const;

    void add_term(const ExponentIndex& e, const Integer& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::size_t dim_;
    Terms terms_;
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial neg(const LaurentPolynomial& p);

// p(u, v) -> p(v, u). Two variables only.
LaurentPolynomial swap_uv(const LaurentPolynomial& p);

// Image of one variable under a monomial substitution: sign * x^exponents.
struct MonomialImage {
    int sign = 1;
    ExponentIndex exponents;
};

// Substitute images[i] for variable i and collect. All images must share
// one dimension, which becomes the dimension of the result.
LaurentPolynomial eval_monomial_map(const LaurentPolynomial& p, std::span<const MonomialImage> images);

// Terms in TermOrder, e.g. "u + v - u^2*v - u*v^2 + u^2*v^2"; zero is "0".
std::string canonical_string(const LaurentPolynomial& p);
LaurentPolynomial parse_polynomial(std::string_view text, std::size_t dimension = 2);

}  // namespace vstring
