#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "supercatalan/errors.hpp"

namespace supercatalan::detail {

/// C(n,k) in a machine word, n <= 64. The whole table fits in uint64.
inline std::uint64_t small_binomial(unsigned n, unsigned k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (unsigned i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (unsigned j = 1; j <= i; ++j) {
                t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
            }
        }
        return t;
    }();
    if (n > 64) {
        throw domain_error("small_binomial: n > 64");
    }
    if (k > n) {
        return 0;
    }
    return table[n][k];
}

/// Next word with the same popcount (Gosper). v must be nonzero and not the
/// largest word of its class within the caller's range.
inline std::uint64_t next_same_popcount(std::uint64_t v) {
    const std::uint64_t t = v | (v - 1);
    return (t + 1) | ((((t + 1) & ~t) - 1) >> (std::countr_zero(v) + 1));
}

/// All `width`-bit masks of weight w, ascending. width <= 31.
inline std::vector<std::uint32_t> weight_masks(unsigned width, unsigned w) {
    std::vector<std::uint32_t> masks;
    if (w > width) {
        return masks;
    }
    if (w == 0) {
        masks.push_back(0);
        return masks;
    }
    std::uint64_t m = (1ull << w) - 1;
    const std::uint64_t limit = 1ull << width;
    while (m < limit) {
        masks.push_back(static_cast<std::uint32_t>(m));
        m = next_same_popcount(m);
    }
    return masks;
}

/// The rank-th smallest `total`-bit word with `ones` set bits
/// (combinatorial number system).
inline std::uint64_t unrank_combination(unsigned total, unsigned ones, std::uint64_t rank) {
    std::uint64_t bits = 0;
    unsigned remaining = ones;
    for (unsigned pos = total; pos-- > 0 && remaining > 0;) {
        const std::uint64_t below = small_binomial(pos, remaining);
        if (rank >= below) {
            bits |= 1ull << pos;
            rank -= below;
            --remaining;
        }
    }
    return bits;
}

}  // namespace supercatalan::detail
