#pragma once

// Signed-class partition of balanced lattice paths and maximum-matching
// search for parity-reversing injections under restricted move relations.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "supercatalan/detail/bits.hpp"
#include "supercatalan/errors.hpp"
#include "supercatalan/exact.hpp"
#include "supercatalan/lattice_paths.hpp"
#include "supercatalan/super_catalan.hpp"

namespace supercatalan {

inline constexpr unsigned kDefaultMatchingCap = 9;

/// P_{m+n} split by the parity of the height after 2m steps: plus_class holds
/// paths with h_{2m} == m (mod 2), minus_class the rest. Both lex-sorted.
/// Cardinality identity: |plus| - |minus| = S(m,n).
struct SignedClasses {
    unsigned m = 0;
    unsigned n = 0;
    std::vector<LatticePath> minus_class;
    std::vector<LatticePath> plus_class;
};

inline SignedClasses partition_by_parity(SCNIndex idx,
                                         unsigned cap = kDefaultEnumerationCap) {
    const unsigned half = idx.m + idx.n;
    SignedClasses out;
    out.m = idx.m;
    out.n = idx.n;
    PathStream stream(half, cap);
    const unsigned prefix = 2 * idx.m;
    while (auto p = stream.next()) {
        const bool plus = (height_after(*p, prefix) & 1u) == (idx.m & 1u);
        (plus ? out.plus_class : out.minus_class).push_back(*p);
    }
    const Nat scn = scn_closed_form(idx);
    if (out.plus_class.size() < out.minus_class.size() ||
        Nat(out.plus_class.size() - out.minus_class.size()) != scn) {
        throw claim_failed_error(
            "partition_by_parity: |plus| - |minus| != S(m,n) at m=" +
            std::to_string(idx.m) + " n=" + std::to_string(idx.n));
    }
    return out;
}

/// Which unordered pairs {P, Q} count as a single move.
struct MoveRelation {
    enum class Kind {
        BoundarySwap,  // swap steps 2m-1 and 2m (0-based) when they differ
        HammingK,      // flip equally many up- and right-steps, distance <= k
        Complete,      // every minus/plus pair
    };

    Kind kind = Kind::BoundarySwap;
    unsigned k = 0;  // bound for HammingK, unused otherwise

    static MoveRelation boundary_swap() { return {Kind::BoundarySwap, 0}; }
    static MoveRelation hamming(unsigned k) { return {Kind::HammingK, k}; }
    static MoveRelation complete() { return {Kind::Complete, 0}; }

    std::string name() const {
        switch (kind) {
            case Kind::BoundarySwap:
                return "boundary_swap";
            case Kind::HammingK:
                return "hamming_" + std::to_string(k);
            case Kind::Complete:
                return "complete";
        }
        throw domain_error("MoveRelation: unknown kind");
    }
};

namespace detail {

/// Index of the path with word `bits` in a lex-sorted class, or -1.
inline int find_path(const std::vector<LatticePath>& sorted, std::uint64_t bits) {
    const auto it = std::lower_bound(
        sorted.begin(), sorted.end(), bits,
        [](const LatticePath& p, std::uint64_t b) { return p.bits() < b; });
    if (it == sorted.end() || it->bits() != bits) {
        return -1;
    }
    return static_cast<int>(it - sorted.begin());
}

/// Adjacency lists minus -> plus under the move relation, each list sorted.
/// Complete is never materialized here.
inline std::vector<std::vector<int>> build_relation_edges(const SignedClasses& classes,
                                                          const MoveRelation& moves) {
    const unsigned m = classes.m;
    const unsigned n = classes.n;
    const unsigned len = 2 * (m + n);
    std::vector<std::vector<int>> adj(classes.minus_class.size());

    if (moves.kind == MoveRelation::Kind::BoundarySwap) {
        if (m == 0 || n == 0) {
            return adj;  // minus class is empty in these columns anyway
        }
        // steps 2m-1 and 2m sit at word bits 2n and 2n-1
        const std::uint64_t pair_mask = 3ull << (2 * n - 1);
        for (std::size_t i = 0; i < classes.minus_class.size(); ++i) {
            const std::uint64_t bits = classes.minus_class[i].bits();
            const unsigned two = static_cast<unsigned>((bits >> (2 * n - 1)) & 3u);
            if (two == 1 || two == 2) {
                const int j = find_path(classes.plus_class, bits ^ pair_mask);
                if (j < 0) {
                    throw error("build_relation_edges: boundary swap left the class");
                }
                adj[i].push_back(j);
            }
        }
        return adj;
    }

    if (moves.kind != MoveRelation::Kind::HammingK) {
        throw domain_error("build_relation_edges: relation has no explicit edges");
    }

    // A balanced path has m+n up-steps and m+n right-steps; a move that
    // keeps it balanced flips s of each, landing at Hamming distance 2s.
    const unsigned half = m + n;
    std::vector<std::vector<std::uint32_t>> index_masks;
    for (unsigned s = 1; 2 * s <= moves.k; ++s) {
        index_masks.push_back(weight_masks(half, s));
    }

    std::vector<unsigned> ups(half), rights(half);
    for (std::size_t i = 0; i < classes.minus_class.size(); ++i) {
        const std::uint64_t bits = classes.minus_class[i].bits();
        unsigned u = 0, r = 0;
        for (unsigned pos = 0; pos < len; ++pos) {
            if ((bits >> (len - 1 - pos)) & 1u) {
                ups[u++] = len - 1 - pos;
            } else {
                rights[r++] = len - 1 - pos;
            }
        }
        for (const auto& masks : index_masks) {
            for (std::uint32_t um : masks) {
                std::uint64_t up_flip = 0;
                for (std::uint32_t t = um; t != 0; t &= t - 1) {
                    up_flip |= 1ull << ups[std::countr_zero(t)];
                }
                for (std::uint32_t rm : masks) {
                    std::uint64_t flip = up_flip;
                    for (std::uint32_t t = rm; t != 0; t &= t - 1) {
                        flip |= 1ull << rights[std::countr_zero(t)];
                    }
                    const int j = find_path(classes.plus_class, bits ^ flip);
                    if (j >= 0) {
                        adj[i].push_back(j);
                    }
                }
            }
        }
        std::sort(adj[i].begin(), adj[i].end());
    }
    return adj;
}

/// Hopcroft-Karp on sorted adjacency lists. Deterministic: vertices are
/// scanned in index order and lists are pre-sorted.
class BipartiteMatcher {
public:
    BipartiteMatcher(const std::vector<std::vector<int>>& adj, std::size_t right_count)
        : adj_(adj),
          left_match_(adj.size(), -1),
          right_match_(right_count, -1),
          layer_(adj.size(), kInf) {}

    std::size_t run() {
        std::size_t matched = 0;
        while (bfs_layers()) {
            for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
                if (left_match_[u] < 0 && augment(u)) {
                    ++matched;
                }
            }
        }
        return matched;
    }

    const std::vector<int>& left_match() const { return left_match_; }
    const std::vector<int>& right_match() const { return right_match_; }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs_layers() {
        std::queue<int> q;
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
            layer_[u] = left_match_[u] < 0 ? 0 : kInf;
            if (layer_[u] == 0) {
                q.push(u);
            }
        }
        bool reachable = false;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj_[u]) {
                const int w = right_match_[v];
                if (w < 0) {
                    reachable = true;
                } else if (layer_[w] == kInf) {
                    layer_[w] = layer_[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable;
    }

    bool augment(int u) {
        for (int v : adj_[u]) {
            const int w = right_match_[v];
            if (w < 0 || (layer_[w] == layer_[u] + 1 && augment(w))) {
                left_match_[u] = v;
                right_match_[v] = u;
                return true;
            }
        }
        layer_[u] = kInf;
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> left_match_;
    std::vector<int> right_match_;
    std::vector<int> layer_;
};

/// Berge certificate: no alternating path from an unmatched left vertex may
/// reach an unmatched right vertex.
inline bool matching_is_maximum(const std::vector<std::vector<int>>& adj,
                                const std::vector<int>& left_match,
                                const std::vector<int>& right_match) {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        if (left_match[u] < 0) {
            seen[u] = 1;
            q.push(u);
        }
    }
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            const int w = right_match[v];
            if (w < 0) {
                return false;
            }
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return true;
}

}  // namespace detail

/// Outcome of a maximum-matching search between the signed classes.
/// pairs is ordered by the minus side (lex); uncovered is the lex-sorted
/// plus-side remainder, so uncovered.size() = S(m,n) + deficiency.
struct MatchingResult {
    unsigned m = 0;
    unsigned n = 0;
    MoveRelation relation;
    std::size_t minus_size = 0;
    std::size_t plus_size = 0;
    std::vector<std::pair<LatticePath, LatticePath>> pairs;
    std::vector<LatticePath> uncovered;
    std::size_t deficiency = 0;  // minus vertices no move can pair off

    bool injection_found() const { return deficiency == 0; }
};

inline MatchingResult search_injection(SCNIndex idx, const MoveRelation& moves,
                                       unsigned cap = kDefaultMatchingCap) {
    if (idx.m + idx.n > cap) {
        throw cap_exceeded_error("search_injection: m+n=" + std::to_string(idx.m + idx.n) +
                                 " exceeds cap " + std::to_string(cap) +
                                 "; raise the cap explicitly to search larger classes");
    }
    const SignedClasses classes = partition_by_parity(idx, cap);

    MatchingResult out;
    out.m = idx.m;
    out.n = idx.n;
    out.relation = moves;
    out.minus_size = classes.minus_class.size();
    out.plus_size = classes.plus_class.size();

    std::vector<int> left_match, right_match;
    if (moves.kind == MoveRelation::Kind::Complete) {
        // |minus| <= |plus|, so pairing by rank already saturates the left side
        left_match.assign(classes.minus_class.size(), -1);
        right_match.assign(classes.plus_class.size(), -1);
        for (std::size_t i = 0; i < classes.minus_class.size(); ++i) {
            left_match[i] = static_cast<int>(i);
            right_match[i] = static_cast<int>(i);
        }
    } else {
        const auto adj = detail::build_relation_edges(classes, moves);
        detail::BipartiteMatcher matcher(adj, classes.plus_class.size());
        matcher.run();
        left_match = matcher.left_match();
        right_match = matcher.right_match();
        if (!detail::matching_is_maximum(adj, left_match, right_match)) {
            throw error("search_injection: matcher returned a non-maximum matching");
        }
    }

    for (std::size_t i = 0; i < left_match.size(); ++i) {
        if (left_match[i] >= 0) {
            out.pairs.emplace_back(classes.minus_class[i],
                                   classes.plus_class[static_cast<std::size_t>(left_match[i])]);
        }
    }
    for (std::size_t j = 0; j < right_match.size(); ++j) {
        if (right_match[j] < 0) {
            out.uncovered.push_back(classes.plus_class[j]);
        }
    }
    out.deficiency = out.minus_size - out.pairs.size();

    const Nat scn = scn_closed_form(idx);
    if (Nat(out.uncovered.size()) != scn + Nat(out.deficiency)) {
        throw claim_failed_error("search_injection: |uncovered| != S(m,n) + deficiency at m=" +
                                 std::to_string(idx.m) + " n=" + std::to_string(idx.n));
    }
    return out;
}

/// MatchingResult with paths rendered as R/U strings, ready for serialization.
struct WitnessReport {
    unsigned m = 0;
    unsigned n = 0;
    std::string relation;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> uncovered;
    std::size_t deficiency = 0;
    std::size_t uncovered_count = 0;
    Nat scn;
    bool injection_found = false;
};

inline WitnessReport export_witnesses(const MatchingResult& result) {
    WitnessReport report;
    report.m = result.m;
    report.n = result.n;
    report.relation = result.relation.name();
    for (const auto& [p, q] : result.pairs) {
        report.pairs.emplace_back(p.str(), q.str());
    }
    for (const auto& p : result.uncovered) {
        report.uncovered.push_back(p.str());
    }
    report.deficiency = result.deficiency;
    report.uncovered_count = result.uncovered.size();
    report.scn = scn_closed_form({result.m, result.n});
    report.injection_found = result.injection_found();
    return report;
}

}  // namespace supercatalan
