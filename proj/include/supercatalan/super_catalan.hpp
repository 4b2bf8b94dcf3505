#pragma once

#include <algorithm>

#include "supercatalan/combinatorics.hpp"
#include "supercatalan/exact.hpp"

namespace supercatalan {

/// Index pair (m, n) of a super Catalan number.
struct SCNIndex {
    unsigned m = 0;
    unsigned n = 0;

    friend bool operator==(const SCNIndex&, const SCNIndex&) = default;
};

/// S(m,n) = (2m)!(2n)! / (m! n! (m+n)!). Integrality is a theorem, so the
/// final division is checked; a remainder would mean a computation bug.
inline Nat scn_closed_form(SCNIndex idx) {
    const Nat num = factorial(Nat(2ull * idx.m)) * factorial(Nat(2ull * idx.n));
    const Nat den = factorial(Nat(idx.m)) * factorial(Nat(idx.n)) * factorial(Nat(idx.m + idx.n));
    return checked_div(num, den);
}

/// Alternating sum  sum_k (-1)^k C(2m, m+k) C(2n, n-k)  over the finite
/// support max(-m,-n) <= k <= min(m,n); outside it a binomial factor is 0.
/// Returned signed on purpose: equality with the closed form is a cross-check,
/// not an assumption.
inline Int scn_von_szily(SCNIndex idx) {
    const long long m = idx.m;
    const long long n = idx.n;
    const long long bound = std::min(m, n);
    Int sum(0);
    for (long long k = -bound; k <= bound; ++k) {
        const Nat term =
            binomial(Nat(2ull * idx.m), m + k) * binomial(Nat(2ull * idx.n), n - k);
        if (k & 1LL) {
            sum -= Int(term);
        } else {
            sum += Int(term);
        }
    }
    return sum;
}

/// Catalan number C_n = C(2n,n) / (n+1).
inline Nat catalan(unsigned n) {
    return checked_div(binomial(Nat(2ull * n), n), Nat(n + 1ull));
}

/// Central binomial coefficient C(2n,n).
inline Nat middle_binomial(unsigned n) {
    return binomial(Nat(2ull * n), n);
}

}  // namespace supercatalan
