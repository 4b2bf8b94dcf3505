// Acceptance suite. Runs the end-to-end checks that gate a release and
// prints one PASS/FAIL line per check. Exits nonzero if any check fails
// or overruns its pinned time budget.
//
// Usage: acceptance <path-to-supercat-binary>

#include <supercatalan/supercatalan.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace sc = supercatalan;

namespace {

unsigned worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Histogram sweeps for N = 0..10, filled by check 1 and reused by check 3
// so the 184,756-path enumeration at N=10 happens exactly once.
std::vector<std::vector<sc::PathHistogram>> g_sweeps;

const std::vector<sc::PathHistogram>& sweep_for(unsigned N) {
    if (g_sweeps.size() <= N) {
        g_sweeps.resize(N + 1);
    }
    if (g_sweeps[N].empty()) {
        g_sweeps[N] = sc::histogram_sweep(N, sc::kDefaultEnumerationCap, worker_threads());
    }
    return g_sweeps[N];
}

sc::Int alternating_sum(const std::vector<sc::Nat>& counts) {
    sc::Int sum(0);
    for (std::size_t h = 0; h < counts.size(); ++h) {
        if (h % 2 == 0) {
            sum += sc::Int(counts[h]);
        } else {
            sum -= sc::Int(counts[h]);
        }
    }
    return sum;
}

std::string fmt_pair(unsigned m, unsigned n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

// ---- checks; each returns "" on success, otherwise a short reason ----

std::string check_four_way_agreement() {
    for (unsigned N = 0; N <= 10; ++N) {
        const auto& sweep = sweep_for(N);
        for (const auto& hist : sweep) {
            const sc::SCNIndex idx{hist.m, hist.n};
            const sc::Nat closed = sc::scn_closed_form(idx);
            const sc::Int szily = sc::scn_von_szily(idx);
            const sc::Nat kraw = sc::scn_via_krawtchouk(idx);
            sc::Int from_paths = alternating_sum(hist.enumerated);
            if (hist.m % 2 == 1) {
                from_paths = -from_paths;
            }
            if (szily != sc::Int(closed)) {
                return "convolution sum disagrees at " + fmt_pair(hist.m, hist.n);
            }
            if (kraw != closed) {
                return "polynomial specialization disagrees at " + fmt_pair(hist.m, hist.n);
            }
            if (from_paths != sc::Int(closed)) {
                return "signed path count disagrees at " + fmt_pair(hist.m, hist.n);
            }
        }
    }
    // tie the histogram-derived sums to the direct enumerator on a few pairs
    const std::pair<unsigned, unsigned> spots[] = {{0, 0}, {1, 2}, {3, 3}, {2, 5}, {5, 5}};
    for (const auto& [m, n] : spots) {
        const sc::Int direct =
            sc::signed_sum_enumerated({m, n}, sc::kDefaultEnumerationCap, worker_threads());
        sc::Int expected = alternating_sum(sweep_for(m + n)[m].enumerated);
        if (direct != expected) {
            return "direct enumerator disagrees with histogram route at " + fmt_pair(m, n);
        }
    }
    return "";
}

std::string check_three_way_agreement() {
    for (unsigned N = 0; N <= 20; ++N) {
        for (unsigned m = 0; m <= N; ++m) {
            const sc::SCNIndex idx{m, N - m};
            const sc::Nat closed = sc::scn_closed_form(idx);
            if (sc::scn_von_szily(idx) != sc::Int(closed)) {
                return "convolution sum disagrees at " + fmt_pair(m, N - m);
            }
            if (sc::scn_via_krawtchouk(idx) != closed) {
                return "polynomial specialization disagrees at " + fmt_pair(m, N - m);
            }
        }
    }
    return "";
}

std::string check_histogram_identity() {
    for (unsigned N = 0; N <= 10; ++N) {
        for (const auto& hist : sweep_for(N)) {
            if (hist.enumerated.size() != hist.closed_form.size()) {
                return "column size mismatch at " + fmt_pair(hist.m, hist.n);
            }
            for (std::size_t h = 0; h < hist.enumerated.size(); ++h) {
                if (hist.enumerated[h] != hist.closed_form[h]) {
                    return "count mismatch at " + fmt_pair(hist.m, hist.n) +
                           " height " + std::to_string(h);
                }
            }
        }
    }
    return "";
}

std::string check_special_cases() {
    for (unsigned n = 0; n <= 15; ++n) {
        if (sc::scn_closed_form({1, n}) != sc::Nat(2) * sc::catalan(n)) {
            return "S(1," + std::to_string(n) + ") != 2*Catalan";
        }
        if (sc::scn_closed_form({0, n}) != sc::middle_binomial(n)) {
            return "S(0," + std::to_string(n) + ") != central binomial";
        }
    }
    return "";
}

std::string check_spectral_claim() {
    for (unsigned N = 1; N <= 5; ++N) {
        const sc::SpectrumReport report = sc::orthogonality_report(N);
        if (report.eigen_set != report.scn_set) {
            return "value sets differ at N=" + std::to_string(N);
        }
        if (report.eigen_set.empty()) {
            return "empty eigenvalue set at N=" + std::to_string(N);
        }
    }
    return "";
}

std::string check_eigen_suite() {
    for (unsigned d = 1; d <= 8; ++d) {
        for (unsigned j = 1; j <= d; ++j) {
            const sc::DistanceGraph g(d, j);
            for (unsigned size = 0; size <= d; ++size) {
                const std::uint32_t subset = (size == 0) ? 0u : ((1u << size) - 1u);
                const sc::Int eigen = sc::verify_eigenvector(g, subset);
                if (eigen != sc::krawtchouk(d, j, size)) {
                    return "eigenvalue mismatch at d=" + std::to_string(d) +
                           " j=" + std::to_string(j) + " |S|=" + std::to_string(size);
                }
            }
        }
    }
    for (unsigned d = 1; d <= 12; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
            for (unsigned x = 0; x <= d; ++x) {
                const sc::Int lhs = sc::krawtchouk(d, j, d - x);
                sc::Int rhs = sc::krawtchouk(d, j, x);
                if (j % 2 == 1) {
                    rhs = -rhs;
                }
                if (lhs != rhs) {
                    return "reflection fails at d=" + std::to_string(d) +
                           " j=" + std::to_string(j) + " x=" + std::to_string(x);
                }
            }
        }
        for (unsigned i = 0; i <= d; ++i) {
            for (unsigned j = 0; j <= d; ++j) {
                sc::Int sum(0);
                for (unsigned x = 0; x <= d; ++x) {
                    sum += sc::Int(sc::binomial(sc::Nat(d), x)) * sc::krawtchouk(d, i, x) *
                           sc::krawtchouk(d, j, x);
                }
                sc::Int expected(0);
                if (i == j) {
                    expected = sc::Int(sc::Nat(1ull << d)) * sc::Int(sc::binomial(sc::Nat(d), j));
                }
                if (sum != expected) {
                    return "orthogonality fails at d=" + std::to_string(d) + " i=" +
                           std::to_string(i) + " j=" + std::to_string(j);
                }
            }
        }
    }
    return "";
}

std::vector<sc::Nat> brute_force_weights(unsigned d, const std::vector<std::uint32_t>& rows) {
    std::vector<sc::Nat> counts(d + 1, sc::Nat(0));
    const std::uint32_t total = 1u << rows.size();
    for (std::uint32_t pick = 0; pick < total; ++pick) {
        std::uint32_t word = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (pick & (1u << r)) {
                word ^= rows[r];
            }
        }
        counts[static_cast<unsigned>(std::popcount(word))] += sc::Nat(1);
    }
    return counts;
}

std::string check_macwilliams_round_trip() {
    // [7,4] code with generator [I|A], A rows 110/101/011/111, and its dual
    // generated by [A^T|I]. Both weight distributions come from literally
    // enumerating the code words.
    const std::vector<std::uint32_t> gen = {0b1000110, 0b0100101, 0b0010011, 0b0001111};
    const std::vector<std::uint32_t> dual_gen = {0b1101100, 0b1011010, 0b0111001};
    for (const std::uint32_t g : gen) {
        for (const std::uint32_t h : dual_gen) {
            if (std::popcount(g & h) % 2 != 0) {
                return "generator and dual rows are not orthogonal";
            }
        }
    }
    const std::vector<sc::Nat> code_counts = brute_force_weights(7, gen);
    const std::vector<sc::Nat> dual_counts = brute_force_weights(7, dual_gen);

    const std::vector<sc::Rat> forward =
        sc::macwilliams_transform(sc::WeightDistribution(7, code_counts), sc::Nat(16));
    const std::vector<sc::Rat> back =
        sc::macwilliams_transform(sc::WeightDistribution(7, dual_counts), sc::Nat(8));
    for (unsigned j = 0; j <= 7; ++j) {
        if (!forward[j].is_integral() || forward[j].to_int() != sc::Int(dual_counts[j])) {
            return "forward transform wrong at j=" + std::to_string(j);
        }
        if (!back[j].is_integral() || back[j].to_int() != sc::Int(code_counts[j])) {
            return "inverse transform wrong at j=" + std::to_string(j);
        }
    }
    return "";
}

bool pair_respects_relation(const sc::MoveRelation& rel, unsigned m,
                            const sc::LatticePath& a, const sc::LatticePath& b) {
    switch (rel.kind) {
        case sc::MoveRelation::Kind::BoundarySwap: {
            if (m == 0) {
                return false;
            }
            std::string t = a.str();
            if (2 * m >= t.size()) {
                return false;
            }
            std::swap(t[2 * m - 1], t[2 * m]);
            return t == b.str() && a.bits() != b.bits();
        }
        case sc::MoveRelation::Kind::HammingK: {
            const unsigned dist =
                static_cast<unsigned>(std::popcount(a.bits() ^ b.bits()));
            return dist > 0 && dist <= rel.k;
        }
        case sc::MoveRelation::Kind::Complete:
            return true;
    }
    return false;
}

std::string check_injection_harness() {
    // the frozen witness case first
    {
        const auto result =
            sc::search_injection({1, 1}, sc::MoveRelation::boundary_swap());
        if (result.deficiency != 0 || !result.injection_found()) {
            return "deficiency should be 0 at (1,1)";
        }
        if (result.uncovered.size() != 2 || result.uncovered[0].str() != "RUUR" ||
            result.uncovered[1].str() != "URRU") {
            return "uncovered set at (1,1) is not {RUUR, URRU}";
        }
    }

    const sc::MoveRelation relations[] = {
        sc::MoveRelation::boundary_swap(),
        sc::MoveRelation::hamming(2),
        sc::MoveRelation::hamming(4),
        sc::MoveRelation::complete(),
    };
    for (unsigned N = 0; N <= 8; ++N) {
        for (unsigned m = 0; m <= N; ++m) {
            const unsigned n = N - m;
            const sc::Nat scn = sc::scn_closed_form({m, n});
            std::size_t previous_deficiency = 0;
            bool have_previous = false;
            for (const auto& rel : relations) {
                const auto result = sc::search_injection({m, n}, rel);
                const sc::Nat uncovered_count(result.uncovered.size());
                if (uncovered_count < scn) {
                    return "uncovered set smaller than the signed count at " +
                           fmt_pair(m, n) + " under " + rel.name();
                }
                if ((uncovered_count == scn) != (result.deficiency == 0)) {
                    return "uncovered size and deficiency disagree at " + fmt_pair(m, n) +
                           " under " + rel.name();
                }
                if (have_previous && result.deficiency > previous_deficiency) {
                    return "deficiency grew when moves were added at " + fmt_pair(m, n) +
                           " under " + rel.name();
                }
                previous_deficiency = result.deficiency;
                have_previous = true;

                std::set<std::uint64_t> minus_used;
                std::set<std::uint64_t> plus_used;
                for (const auto& [minus, plus] : result.pairs) {
                    if (!pair_respects_relation(rel, m, minus, plus)) {
                        return "matched pair violates " + rel.name() + " at " + fmt_pair(m, n);
                    }
                    if (!minus_used.insert(minus.bits()).second ||
                        !plus_used.insert(plus.bits()).second) {
                        return "a path was matched twice at " + fmt_pair(m, n);
                    }
                }
                if (result.pairs.size() + result.uncovered.size() != result.plus_size) {
                    return "matched plus uncovered misses the class size at " + fmt_pair(m, n);
                }
                if (result.pairs.size() + result.deficiency != result.minus_size) {
                    return "matched plus deficiency misses the class size at " + fmt_pair(m, n);
                }
            }
            // the last relation is complete: it must pair off every minus path
            if (previous_deficiency != 0) {
                return "complete relation failed to saturate at " + fmt_pair(m, n);
            }
        }
    }
    return "";
}

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& command_line) {
    CliRun r;
    FILE* pipe = popen((command_line + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.output.append(buf, got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string g_cli_path;

std::string check_cli_determinism() {
    if (g_cli_path.empty()) {
        return "no CLI binary path supplied";
    }
    const CliRun one = run_cli(g_cli_path + " verify s1 --max 10 --format json --threads 1");
    const CliRun eight = run_cli(g_cli_path + " verify s1 --max 10 --format json --threads 8");
    if (one.exit_code != 0 || eight.exit_code != 0) {
        return "verify sweep exited " + std::to_string(one.exit_code) + " / " +
               std::to_string(eight.exit_code);
    }
    if (one.output.empty() || one.output.front() != '{') {
        return "verify sweep produced no JSON document";
    }
    if (one.output != eight.output) {
        return "thread count changed the output bytes";
    }
    if (one.output.find("\"passed\": \"66\"") == std::string::npos) {
        return "sweep did not report 66 passing checks";
    }
    return "";
}

struct Check {
    std::string label;
    double budget_seconds;
    std::function<std::string()> body;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2) {
        g_cli_path = argv[1];
    }

    const std::vector<Check> checks = {
        {"four-way agreement (closed form, convolution, polynomial, enumeration), m+n <= 10",
         60.0, check_four_way_agreement},
        {"three-way agreement without enumeration, m+n <= 20", 1.0, check_three_way_agreement},
        {"height histogram matches its product formula entrywise, m+n <= 10", 5.0,
         check_histogram_identity},
        {"Catalan and central binomial special cases, n <= 15", 1.0, check_special_cases},
        {"distance-graph eigenvalue sets match the signed values, N = 1..5", 30.0,
         check_spectral_claim},
        {"character eigenvectors d <= 8 plus reflection and orthogonality d <= 12", 60.0,
         check_eigen_suite},
        {"weight-distribution transform round trip against brute-force code words", 1.0,
         check_macwilliams_round_trip},
        {"matching harness invariants for every relation, m+n <= 8", 120.0,
         check_injection_harness},
        {"byte-identical CLI output across thread counts", 60.0, check_cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = checks[i].body();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && elapsed >= checks[i].budget_seconds) {
            char note[64];
            std::snprintf(note, sizeof note, "exceeded %.0f s budget", checks[i].budget_seconds);
            reason = note;
        }
        const bool ok = reason.empty();
        failures += ok ? 0 : 1;
        std::printf("%s  %zu/%zu %s  [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", i + 1, checks.size(),
                    checks[i].label.c_str(), elapsed, ok ? "" : ": ", reason.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: %zu/%zu checks passed\n", checks.size(), checks.size());
        return 0;
    }
    std::printf("acceptance: %d check(s) FAILED\n", failures);
    return 1;
}
