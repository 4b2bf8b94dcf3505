#pragma once

#include <vector>

#include "supercatalan/exact.hpp"

namespace supercatalan {

/// n! by iterated multiplication.
inline Nat factorial(const Nat& n) {
    cpp_int r = 1;
    for (cpp_int i = 2; i <= n.value(); ++i) {
        r *= i;
    }
    return Nat(std::move(r));
}

/// C(n,k) by the multiplicative formula with stepwise exact division.
/// Returns 0 for k < 0 or k > n; the Krawtchouk sum relies on that convention.
inline Nat binomial(const Nat& n, long long k) {
    if (k < 0) {
        return Nat(0);
    }
    cpp_int kk(k);
    if (kk > n.value()) {
        return Nat(0);
    }
    if (n.value() - kk < kk) {
        kk = n.value() - kk;
    }
    cpp_int r = 1;
    for (cpp_int i = 1; i <= kk; ++i) {
        r *= n.value() - kk + i;
        r /= i;  // exact: r is a binomial times a falling-factorial prefix
    }
    return Nat(std::move(r));
}

/// Memoized Pascal triangle for sweep workloads. Immutable after construction,
/// safe for concurrent reads.
class BinomialTable {
public:
    explicit BinomialTable(unsigned max_n) : max_n_(max_n) {
        rows_.resize(max_n + 1);
        for (unsigned i = 0; i <= max_n; ++i) {
            rows_[i].resize(i + 1, Nat(1));
            for (unsigned j = 1; j < i; ++j) {
                rows_[i][j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
            }
        }
    }

    unsigned max_n() const { return max_n_; }

    const Nat& at(unsigned n, long long k) const {
        if (n > max_n_) {
            throw domain_error("BinomialTable: row " + std::to_string(n) + " beyond max " +
                               std::to_string(max_n_));
        }
        if (k < 0 || static_cast<unsigned long long>(k) > n) {
            return zero_;
        }
        return rows_[n][static_cast<std::size_t>(k)];
    }

    const std::vector<Nat>& row(unsigned n) const {
        if (n > max_n_) {
            throw domain_error("BinomialTable: row " + std::to_string(n) + " beyond max " +
                               std::to_string(max_n_));
        }
        return rows_[n];
    }

private:
    unsigned max_n_;
    std::vector<std::vector<Nat>> rows_;
    Nat zero_{0};
};

}  // namespace supercatalan
