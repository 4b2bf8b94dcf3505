#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supercatalan/combinatorics.hpp"
#include "supercatalan/exact.hpp"
#include "supercatalan/super_catalan.hpp"

namespace supercatalan {

/// Evaluation point of a binary Krawtchouk polynomial: ambient length d,
/// degree index j in [0,d], integer point x in [0,d].
struct KrawtchoukPoint {
    unsigned d = 0;
    unsigned j = 0;
    unsigned x = 0;
};

/// K_j^d(x) = sum_{h=0}^{j} (-1)^h C(x,h) C(d-x, j-h).
inline Int krawtchouk(KrawtchoukPoint p) {
    if (p.j > p.d || p.x > p.d) {
        throw domain_error("krawtchouk: j and x must lie in [0, d], got d=" +
                           std::to_string(p.d) + " j=" + std::to_string(p.j) +
                           " x=" + std::to_string(p.x));
    }
    Int sum(0);
    for (unsigned h = 0; h <= p.j; ++h) {
        const Nat term = binomial(Nat(p.x), h) *
                         binomial(Nat(p.d - p.x), static_cast<long long>(p.j) - h);
        if (h & 1u) {
            sum -= Int(term);
        } else {
            sum += Int(term);
        }
    }
    return sum;
}

inline Int krawtchouk(unsigned d, unsigned j, unsigned x) {
    return krawtchouk(KrawtchoukPoint{d, j, x});
}

/// Full table of K_j^d(x), row per degree j, column per point x.
/// Serialization order is fixed: j outer, x inner.
inline std::vector<std::vector<Int>> krawtchouk_table(unsigned d) {
    std::vector<std::vector<Int>> table(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
        table[j].reserve(d + 1);
        for (unsigned x = 0; x <= d; ++x) {
            table[j].push_back(krawtchouk(d, j, x));
        }
    }
    return table;
}

/// S(m,n) recovered from the Krawtchouk special value K_{m+n}^{2(m+n)}(2m),
/// which equals (-1)^m S(m,n). A negative result after the sign flip would
/// falsify that identity and is reported as claim_failed_error.
inline Nat scn_via_krawtchouk(SCNIndex idx) {
    const unsigned N = idx.m + idx.n;
    const Int value = krawtchouk(2 * N, N, 2 * idx.m);
    const Int unsigned_value = (idx.m % 2 == 1) ? -value : value;
    if (unsigned_value.sign() < 0) {
        throw claim_failed_error("scn_via_krawtchouk: (-1)^m K_{m+n}^{2(m+n)}(2m) is negative at m=" +
                                 std::to_string(idx.m) + " n=" + std::to_string(idx.n));
    }
    return unsigned_value.to_nat();
}

/// Weight distribution of a length-d binary code: counts[i] = number of
/// weight-i words. Exactly d+1 entries.
struct WeightDistribution {
    WeightDistribution(unsigned d_, std::vector<Nat> counts_)
        : d(d_), counts(std::move(counts_)) {
        if (counts.size() != static_cast<std::size_t>(d) + 1) {
            throw domain_error("WeightDistribution: expected " + std::to_string(d + 1) +
                               " counts, got " + std::to_string(counts.size()));
        }
    }

    unsigned d;
    std::vector<Nat> counts;
};

/// MacWilliams transform B_j = (1/|C|) sum_i A_i K_j^d(i). Output is exact
/// rational; it is integral exactly when the input is a linear code's
/// distribution, and that distinction is exposed, not rounded away.
inline std::vector<Rat> macwilliams_transform(const WeightDistribution& w, const Nat& code_size) {
    if (code_size.is_zero()) {
        throw domain_error("macwilliams_transform: code size must be >= 1");
    }
    std::vector<Rat> out;
    out.reserve(w.d + 1);
    for (unsigned j = 0; j <= w.d; ++j) {
        Int sum(0);
        for (unsigned i = 0; i <= w.d; ++i) {
            sum += Int(w.counts[i]) * krawtchouk(w.d, j, i);
        }
        out.emplace_back(sum, code_size);
    }
    return out;
}

}  // namespace supercatalan
