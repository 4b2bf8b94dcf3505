#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "supercatalan/combinatorics.hpp"
#include "supercatalan/detail/bits.hpp"
#include "supercatalan/exact.hpp"
#include "supercatalan/krawtchouk.hpp"
#include "supercatalan/super_catalan.hpp"

namespace supercatalan {

/// Default bound on the cube dimension d (1024 vertices).
inline constexpr unsigned kDefaultCubeCap = 10;

/// Hard limit from the 32-bit vertex encoding.
inline constexpr unsigned kMaxCubeDimension = 31;

/// Distance-j graph of the d-cube: vertices are d-bit words, x ~ y iff
/// Hamming distance(x, y) = j. Regular of degree C(d,j).
struct DistanceGraph {
    DistanceGraph(unsigned d_, unsigned j_) : d(d_), j(j_) {
        if (d == 0 || d > kMaxCubeDimension) {
            throw domain_error("DistanceGraph: d must be in [1, " +
                               std::to_string(kMaxCubeDimension) + "]");
        }
        if (j == 0 || j > d) {
            throw domain_error("DistanceGraph: j must be in [1, d]");
        }
    }

    unsigned d;
    unsigned j;

    Nat degree() const { return binomial(Nat(d), j); }
};

namespace detail {

inline int character_sign(std::uint32_t v) {
    return (std::popcount(v) & 1) ? -1 : 1;
}

}  // namespace detail

/// Neighbors { y : Hamming(x, y) = j }, ascending; |result| = C(d,j).
inline std::vector<std::uint32_t> adjacency_row(const DistanceGraph& g, std::uint32_t x) {
    if (x >> g.d) {
        throw domain_error("adjacency_row: vertex " + std::to_string(x) +
                           " outside the " + std::to_string(g.d) + "-cube");
    }
    std::vector<std::uint32_t> row;
    for (std::uint32_t mask : detail::weight_masks(g.d, g.j)) {
        row.push_back(x ^ mask);
    }
    std::sort(row.begin(), row.end());
    return row;
}

/// Character vector chi_S of the subset mask S: entry (-1)^{|S & x|} at
/// vertex x. An eigenvector of every cube distance graph.
struct CharacterVector {
    CharacterVector(unsigned d_, std::uint32_t subset_) : d(d_), subset(subset_) {
        if (d == 0 || d > kMaxCubeDimension || (subset >> d) != 0) {
            throw domain_error("CharacterVector: subset must be a mask inside {1..d}");
        }
    }

    unsigned d;
    std::uint32_t subset;

    int at(std::uint32_t x) const { return detail::character_sign(subset & x); }
};

/// Checks A * chi_S = K_j^d(|S|) * chi_S exactly at every vertex and returns
/// the eigenvalue. A mismatch at any coordinate (which would falsify the
/// spectral claim) throws eigen_mismatch_error naming the vertex.
inline Int verify_eigenvector(const DistanceGraph& g, std::uint32_t subset,
                              unsigned cap = kDefaultCubeCap) {
    if (g.d > cap) {
        throw cap_exceeded_error("verify_eigenvector: d=" + std::to_string(g.d) +
                                 " exceeds cap " + std::to_string(cap));
    }
    const CharacterVector chi(g.d, subset);
    const unsigned size = static_cast<unsigned>(std::popcount(subset));
    const Int eigenvalue = krawtchouk(g.d, g.j, size);
    const long long lambda = eigenvalue.to_int64();

    const std::vector<std::uint32_t> masks = detail::weight_masks(g.d, g.j);
    const std::uint64_t vertex_count = 1ull << g.d;
    for (std::uint64_t x = 0; x < vertex_count; ++x) {
        const auto xv = static_cast<std::uint32_t>(x);
        long long row_sum = 0;
        for (std::uint32_t mask : masks) {
            row_sum += chi.at(xv ^ mask);
        }
        if (row_sum != lambda * chi.at(xv)) {
            throw eigen_mismatch_error(
                xv, "verify_eigenvector: (A chi)_x = " + std::to_string(row_sum) +
                        " but lambda*chi_x = " + std::to_string(lambda * chi.at(xv)) +
                        " at vertex " + std::to_string(xv) + " (d=" + std::to_string(g.d) +
                        ", j=" + std::to_string(g.j) + ", |S|=" + std::to_string(size) + ")");
        }
    }
    return eigenvalue;
}

/// Certified spectrum of the distance-N graph of the 2N-cube, with the
/// matching super Catalan value set.
struct SpectrumReport {
    struct Multiplicity {
        unsigned x;        // subset size
        Int eigenvalue;    // K_N^{2N}(x)
        Nat multiplicity;  // C(2N, x)
    };

    unsigned N = 0;
    std::set<Int> eigen_set;  // distinct nonzero eigenvalues
    std::set<Int> scn_set;    // {(-1)^m S(m,n) : m+n = N}
    std::vector<Multiplicity> multiplicities;
};

/// Computes both sides of the orthogonality-graph claim independently:
/// every eigenvalue is certified by verify_eigenvector on one representative
/// subset per size (the lexicographically least mask), and the S(m,n) side
/// comes from the closed form. Set inequality throws claim_failed_error.
inline SpectrumReport orthogonality_report(unsigned N, unsigned cap = kDefaultCubeCap) {
    if (N == 0) {
        throw domain_error("orthogonality_report: N must be positive");
    }
    if (2 * N > cap) {
        throw cap_exceeded_error("orthogonality_report: 2N=" + std::to_string(2 * N) +
                                 " exceeds cap " + std::to_string(cap));
    }
    const DistanceGraph g(2 * N, N);

    SpectrumReport report;
    report.N = N;
    for (unsigned x = 0; x <= 2 * N; ++x) {
        const std::uint32_t subset = x == 0 ? 0u : ((1u << x) - 1);
        const Int lambda = verify_eigenvector(g, subset, cap);
        report.multiplicities.push_back({x, lambda, binomial(Nat(2ull * N), x)});
        if (!lambda.is_zero()) {
            report.eigen_set.insert(lambda);
        }
    }
    for (unsigned m = 0; m <= N; ++m) {
        const Int s(scn_closed_form({m, N - m}));
        report.scn_set.insert(m % 2 == 1 ? -s : s);
    }
    if (report.eigen_set != report.scn_set) {
        std::string lhs, rhs;
        for (const Int& v : report.eigen_set) {
            lhs += (lhs.empty() ? "" : ", ") + v.str();
        }
        for (const Int& v : report.scn_set) {
            rhs += (rhs.empty() ? "" : ", ") + v.str();
        }
        throw claim_failed_error("orthogonality_report: eigenvalue set {" + lhs +
                                 "} differs from super Catalan set {" + rhs + "} at N=" +
                                 std::to_string(N));
    }
    return report;
}

}  // namespace supercatalan
