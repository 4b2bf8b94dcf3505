#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "supercatalan/combinatorics.hpp"
#include "supercatalan/detail/bits.hpp"
#include "supercatalan/exact.hpp"
#include "supercatalan/super_catalan.hpp"

namespace supercatalan {

/// Default bound on N = m+n for brute-force path enumeration (~40M paths).
inline constexpr unsigned kDefaultEnumerationCap = 14;

/// Hard encoding limit: a path of 2N steps lives in one 64-bit word.
inline constexpr unsigned kMaxHalfSteps = 31;

enum class Step : unsigned char { Right = 0, Up = 1 };

/// A lattice path from (0,0) to (N,N): 2N steps, exactly N of them Up.
/// Encoded as a 2N-bit word, step i at bit (2N-1-i), 0 = Right, 1 = Up,
/// so lexicographic order with Right < Up is numeric order of the words.
class LatticePath {
public:
    LatticePath() = default;

    LatticePath(std::uint64_t bits, unsigned half_n) : bits_(bits), half_n_(half_n) {
        if (half_n > kMaxHalfSteps) {
            throw domain_error("LatticePath: N=" + std::to_string(half_n) +
                               " exceeds the 64-bit step encoding");
        }
        if (half_n < 32 && (bits >> (2 * half_n)) != 0) {
            throw domain_error("LatticePath: stray bits above step " +
                               std::to_string(2 * half_n));
        }
        if (static_cast<unsigned>(std::popcount(bits)) != half_n) {
            throw domain_error("LatticePath: expected " + std::to_string(half_n) +
                               " up-steps, got " + std::to_string(std::popcount(bits)));
        }
    }

    /// Parse a step string over {R, U}, e.g. "RURU".
    static LatticePath from_string(std::string_view s) {
        if (s.size() % 2 != 0 || s.size() > 2 * kMaxHalfSteps) {
            throw domain_error("LatticePath: step string must have even length <= " +
                               std::to_string(2 * kMaxHalfSteps));
        }
        const unsigned len = static_cast<unsigned>(s.size());
        std::uint64_t bits = 0;
        for (unsigned i = 0; i < len; ++i) {
            if (s[i] == 'U') {
                bits |= 1ull << (len - 1 - i);
            } else if (s[i] != 'R') {
                throw domain_error(std::string("LatticePath: invalid step character '") +
                                   s[i] + "'");
            }
        }
        return LatticePath(bits, len / 2);
    }

    unsigned half_n() const { return half_n_; }
    unsigned length() const { return 2 * half_n_; }
    std::uint64_t bits() const { return bits_; }

    /// Step at 0-based position i.
    Step step(unsigned i) const {
        if (i >= length()) {
            throw domain_error("LatticePath: step index " + std::to_string(i) +
                               " out of range");
        }
        return static_cast<Step>((bits_ >> (length() - 1 - i)) & 1u);
    }

    std::string str() const {
        std::string s(length(), 'R');
        for (unsigned i = 0; i < length(); ++i) {
            if ((bits_ >> (length() - 1 - i)) & 1u) {
                s[i] = 'U';
            }
        }
        return s;
    }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b) {
        if (auto c = a.half_n_ <=> b.half_n_; c != 0) {
            return c;
        }
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    unsigned half_n_ = 0;
};

/// Height after t steps: the number of Up steps among the first t.
inline unsigned height_after(const LatticePath& p, unsigned t) {
    if (t > p.length()) {
        throw domain_error("height_after: t=" + std::to_string(t) + " out of [0, " +
                           std::to_string(p.length()) + "]");
    }
    if (t == 0) {
        return 0;
    }
    return static_cast<unsigned>(std::popcount(p.bits() >> (p.length() - t)));
}

namespace detail {

/// Visit `count` path codes of 2*half_n bits starting at lexicographic rank
/// `first`, in increasing order.
template <class Fn>
void scan_codes(unsigned half_n, std::uint64_t first, std::uint64_t count, Fn&& fn) {
    if (count == 0) {
        return;
    }
    if (half_n == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::uint64_t bits = unrank_combination(2 * half_n, half_n, first);
    for (std::uint64_t i = 0;;) {
        fn(bits);
        if (++i == count) {
            break;
        }
        bits = next_same_popcount(bits);
    }
}

/// Partition the rank space [0, C(2N,N)) into contiguous chunks and run
/// `worker(slot, first, count)` for each, in parallel when threads > 1.
/// Chunk results are merged by the caller in slot order, so the combined
/// value does not depend on the thread count.
template <class Worker>
void parallel_chunks(std::uint64_t total, unsigned threads, Worker&& worker) {
    if (threads <= 1 || total < 2 * static_cast<std::uint64_t>(threads)) {
        worker(0u, std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t first = static_cast<std::uint64_t>(t) * chunk;
        if (first >= total) {
            break;
        }
        const std::uint64_t count = std::min(chunk, total - first);
        pool.emplace_back([&worker, t, first, count] { worker(t, first, count); });
    }
    for (auto& th : pool) {
        th.join();
    }
}

inline void require_enumeration_cap(unsigned half_n, unsigned cap) {
    if (half_n > cap) {
        throw cap_exceeded_error("enumeration of P_" + std::to_string(half_n) +
                                 " exceeds cap " + std::to_string(cap) +
                                 " (raise the cap explicitly for bigger sweeps)");
    }
    if (half_n > kMaxHalfSteps) {
        throw cap_exceeded_error("N=" + std::to_string(half_n) +
                                 " exceeds the 64-bit path encoding limit " +
                                 std::to_string(kMaxHalfSteps));
    }
}

}  // namespace detail

/// |P_N| = C(2N, N) as a machine word (N <= 31 always fits).
inline std::uint64_t path_count(unsigned half_n) {
    if (half_n > kMaxHalfSteps) {
        throw domain_error("path_count: N exceeds encoding limit");
    }
    return detail::small_binomial(2 * half_n, half_n);
}

/// Single-consumer stream over all of P_N in lexicographic order (R < U).
class PathStream {
public:
    explicit PathStream(unsigned half_n, unsigned cap = kDefaultEnumerationCap)
        : half_n_(half_n) {
        detail::require_enumeration_cap(half_n, cap);
        remaining_ = path_count(half_n);
        bits_ = half_n == 0 ? 0 : (1ull << half_n) - 1;
    }

    std::optional<LatticePath> next() {
        if (remaining_ == 0) {
            return std::nullopt;
        }
        LatticePath p(bits_, half_n_);
        if (--remaining_ > 0) {
            bits_ = detail::next_same_popcount(bits_);
        }
        return p;
    }

private:
    unsigned half_n_;
    std::uint64_t bits_ = 0;
    std::uint64_t remaining_ = 0;
};

/// Height counts of P_{m+n} at step 2m. Both columns share the index range
/// h in [0, min(2m, m+n)]; structurally-zero entries are retained.
struct PathHistogram {
    unsigned m = 0;
    unsigned n = 0;
    std::vector<Nat> enumerated;
    std::vector<Nat> closed_form;
};

/// Closed-form column C(2m,h) C(2n, m+n-h); no enumeration, no cap.
inline std::vector<Nat> closed_form_histogram(SCNIndex idx) {
    const unsigned N = idx.m + idx.n;
    const unsigned hmax = std::min(2 * idx.m, N);
    std::vector<Nat> out;
    out.reserve(hmax + 1);
    for (unsigned h = 0; h <= hmax; ++h) {
        out.push_back(binomial(Nat(2ull * idx.m), h) *
                      binomial(Nat(2ull * idx.n), static_cast<long long>(N) - h));
    }
    return out;
}

/// The signed sum  sum_{P in P_{m+n}} (-1)^{h_{2m}(P)}  by actual enumeration.
/// This is the independent brute-force route; it never consults the closed form.
inline Int signed_sum_enumerated(SCNIndex idx, unsigned cap = kDefaultEnumerationCap,
                                 unsigned threads = 1) {
    const unsigned N = idx.m + idx.n;
    detail::require_enumeration_cap(N, cap);
    if (threads == 0) {
        threads = 1;
    }
    const unsigned shift = 2 * N - 2 * idx.m;  // m <= N, so shift < 64
    std::vector<long long> partial(threads, 0);
    detail::parallel_chunks(path_count(N), threads,
                            [&](unsigned slot, std::uint64_t first, std::uint64_t count) {
                                long long acc = 0;
                                detail::scan_codes(N, first, count, [&](std::uint64_t bits) {
                                    acc += (std::popcount(bits >> shift) & 1) ? -1 : 1;
                                });
                                partial[slot] = acc;
                            });
    long long sum = 0;
    for (long long v : partial) {
        sum += v;
    }
    return Int(sum);
}

/// Histograms for every m with m+n = N, filled in one enumeration pass.
inline std::vector<PathHistogram> histogram_sweep(unsigned N,
                                                  unsigned cap = kDefaultEnumerationCap,
                                                  unsigned threads = 1) {
    detail::require_enumeration_cap(N, cap);
    if (threads == 0) {
        threads = 1;
    }
    const auto row_size = [N](unsigned m) { return std::min(2 * m, N) + 1; };

    using Counts = std::vector<std::vector<std::uint64_t>>;  // [m][h]
    const auto empty_counts = [&] {
        Counts c(N + 1);
        for (unsigned m = 0; m <= N; ++m) {
            c[m].assign(row_size(m), 0);
        }
        return c;
    };

    std::vector<Counts> partial(threads, empty_counts());
    detail::parallel_chunks(path_count(N), threads,
                            [&](unsigned slot, std::uint64_t first, std::uint64_t count) {
                                Counts& local = partial[slot];
                                detail::scan_codes(N, first, count, [&](std::uint64_t bits) {
                                    for (unsigned m = 0; m <= N; ++m) {
                                        const unsigned h = static_cast<unsigned>(
                                            std::popcount(bits >> (2 * N - 2 * m)));
                                        ++local[m][h];
                                    }
                                });
                            });

    Counts total = empty_counts();
    for (const Counts& part : partial) {
        for (unsigned m = 0; m <= N; ++m) {
            for (std::size_t h = 0; h < total[m].size(); ++h) {
                total[m][h] += part[m][h];
            }
        }
    }

    std::vector<PathHistogram> out(N + 1);
    for (unsigned m = 0; m <= N; ++m) {
        out[m].m = m;
        out[m].n = N - m;
        out[m].enumerated.reserve(total[m].size());
        for (std::uint64_t c : total[m]) {
            out[m].enumerated.push_back(Nat(c));
        }
        out[m].closed_form = closed_form_histogram({m, N - m});
    }
    return out;
}

/// Histogram of one (m, n): enumerated and closed-form columns.
inline PathHistogram histogram(SCNIndex idx, unsigned cap = kDefaultEnumerationCap,
                               unsigned threads = 1) {
    const unsigned N = idx.m + idx.n;
    detail::require_enumeration_cap(N, cap);
    if (threads == 0) {
        threads = 1;
    }
    const unsigned shift = 2 * N - 2 * idx.m;
    const std::size_t size = std::min(2 * idx.m, N) + 1;

    std::vector<std::vector<std::uint64_t>> partial(threads,
                                                    std::vector<std::uint64_t>(size, 0));
    detail::parallel_chunks(path_count(N), threads,
                            [&](unsigned slot, std::uint64_t first, std::uint64_t count) {
                                auto& local = partial[slot];
                                detail::scan_codes(N, first, count, [&](std::uint64_t bits) {
                                    ++local[std::popcount(bits >> shift)];
                                });
                            });

    PathHistogram out;
    out.m = idx.m;
    out.n = idx.n;
    out.enumerated.assign(size, Nat(0));
    for (const auto& part : partial) {
        for (std::size_t h = 0; h < size; ++h) {
            out.enumerated[h] += Nat(part[h]);
        }
    }
    out.closed_form = closed_form_histogram(idx);
    return out;
}

}  // namespace supercatalan
