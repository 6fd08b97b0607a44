#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

#include <boost/container/small_vector.hpp>

namespace vstring {

// Element of Z^d acting on generator indices; (j, k) in Z^2 is the
// monomial u^j v^k. Length 2 for single strings, n+1 for colored n-strings
// (u_1..u_n, v). The last coordinate is always the v exponent.
class ExponentIndex {
public:
    using value_type = std::int64_t;

    ExponentIndex() = default;
    ExponentIndex(std::initializer_list<value_type> entries) : entries_(entries) {}

    static ExponentIndex zero(std::size_t dim) {
        ExponentIndex e;
        e.entries_.assign(dim, 0);
        return e;
    }
    static ExponentIndex unit(std::size_t dim, std::size_t axis, value_type value = 1) {
        ExponentIndex e = zero(dim);
        e.entries_[axis] = value;
        return e;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    value_type operator[](std::size_t i) const { return entries_[i]; }
    value_type& operator[](std::size_t i) { return entries_[i]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_zero() const noexcept {
        for (auto x : entries_)
            if (x != 0) return false;
        return true;
    }

    // Componentwise; both operands must have the same size (checked by callers).
    ExponentIndex& operator+=(const ExponentIndex& o) {
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    ExponentIndex& operator-=(const ExponentIndex& o) {
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    friend ExponentIndex operator+(ExponentIndex a, const ExponentIndex& b) { return a += b; }
    friend ExponentIndex operator-(ExponentIndex a, const ExponentIndex& b) { return a -= b; }
    friend ExponentIndex operator-(ExponentIndex a) {
        for (auto& x : a.entries_) x = -x;
        return a;
    }

    friend bool operator==(const ExponentIndex& a, const ExponentIndex& b) { return a.entries_ == b.entries_; }
    // Plain lexicographic order on the entries.
    friend std::strong_ordering operator<=>(const ExponentIndex& a, const ExponentIndex& b) {
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                      b.entries_.end());
    }

    // "[j,k]"
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(entries_[i]);
        }
        out.push_back(']');
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : entries_) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }

private:
    boost::container::small_vector<value_type, 4> entries_;
};

}  // namespace vstring
