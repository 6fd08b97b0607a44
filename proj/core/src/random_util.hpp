#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>

namespace vstring::detail {

// Unbiased draw from [0, bound) using only raw engine output, so results
// do not depend on the standard library's distribution implementation.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline bool draw_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

template <class It>
void shuffle(It first, It last, std::mt19937_64& rng) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
        std::swap(first[i - 1], first[draw_below(rng, i)]);
    }
}

// splitmix64 finalizer; derives independent per-item seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace vstring::detail
