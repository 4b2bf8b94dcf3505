// supercat: exact computation and verification of super Catalan numbers
// S(m,n), their Krawtchouk / lattice-path / hypercube-spectrum identities,
// the MacWilliams transform, and the parity-injection search.
//
// Exit codes: 0 all checks pass, 1 a mathematical contract was falsified,
// 2 usage or input error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "supercatalan/supercatalan.hpp"

namespace {

using nlohmann::ordered_json;
using namespace supercatalan;

struct GlobalOptions {
    std::string format = "table";
    unsigned threads = 1;
    std::optional<unsigned> cap_override;

    unsigned cap_or(unsigned fallback) const { return cap_override.value_or(fallback); }
    bool json() const { return format == "json"; }
    bool csv() const { return format == "csv"; }
};

std::string dec(unsigned v) { return std::to_string(v); }
std::string dec(std::size_t v) { return std::to_string(v); }
std::string dec(const Nat& v) { return v.str(); }
std::string dec(const Int& v) { return v.str(); }

void emit_json(const std::string& command, ordered_json params, ordered_json result) {
    ordered_json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["result"] = std::move(result);
    doc["version"] = std::string(kVersion);
    std::cout << doc.dump(2) << "\n";
}

void print_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) {
            width.resize(row.size(), 0);
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(width[c] - row[c].size() + 2, ' ');
            }
        }
        std::cout << line << "\n";
    }
}

void print_csv(const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::cout << row[c] << (c + 1 < row.size() ? "," : "");
        }
        std::cout << "\n";
    }
}

Nat parse_nat_field(const std::string& text, const std::string& field) {
    const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
    if (!digits) {
        throw domain_error("weights file: field \"" + field +
                           "\" must be a decimal digit string, got \"" + text + "\"");
    }
    return Nat(cpp_int(text));
}

// ---------------------------------------------------------------- scn

struct ScnArgs {
    unsigned m = 0;
    unsigned n = 0;
    std::string method = "closed";
    bool verify_all = false;
};

Nat scn_by_method(const GlobalOptions& g, SCNIndex idx, const std::string& method) {
    if (method == "closed") {
        return scn_closed_form(idx);
    }
    if (method == "szily") {
        const Int v = scn_von_szily(idx);
        if (v.sign() < 0) {
            throw claim_failed_error("scn: von Szily sum is negative at m=" + dec(idx.m) +
                                     " n=" + dec(idx.n));
        }
        return v.to_nat();
    }
    if (method == "krawtchouk") {
        return scn_via_krawtchouk(idx);
    }
    // paths: (-1)^m times the enumerated signed sum
    Int v = signed_sum_enumerated(idx, g.cap_or(kDefaultEnumerationCap), g.threads);
    if (idx.m % 2 == 1) {
        v = -v;
    }
    if (v.sign() < 0) {
        throw claim_failed_error("scn: signed path sum has the wrong sign at m=" + dec(idx.m) +
                                 " n=" + dec(idx.n));
    }
    return v.to_nat();
}

int run_scn(const GlobalOptions& g, const ScnArgs& args) {
    const SCNIndex idx{args.m, args.n};

    if (!args.verify_all) {
        const Nat value = scn_by_method(g, idx, args.method);
        if (g.json()) {
            ordered_json params;
            params["m"] = dec(args.m);
            params["n"] = dec(args.n);
            params["method"] = args.method;
            ordered_json result;
            result["value"] = dec(value);
            emit_json("scn", std::move(params), std::move(result));
        } else if (g.csv()) {
            print_csv({{"m", "n", "method", "value"},
                       {dec(args.m), dec(args.n), args.method, dec(value)}});
        } else {
            std::cout << dec(value) << "\n";
        }
        return 0;
    }

    const std::vector<std::string> methods = {"closed", "szily", "krawtchouk", "paths"};
    std::vector<std::string> values;
    for (const auto& method : methods) {
        values.push_back(dec(scn_by_method(g, idx, method)));
    }
    const bool agree = std::all_of(values.begin(), values.end(),
                                   [&](const std::string& v) { return v == values.front(); });

    if (g.json()) {
        ordered_json params;
        params["m"] = dec(args.m);
        params["n"] = dec(args.n);
        params["verify_all"] = true;
        ordered_json result;
        ordered_json by_method;
        for (std::size_t i = 0; i < methods.size(); ++i) {
            by_method[methods[i]] = values[i];
        }
        result["methods"] = std::move(by_method);
        result["agree"] = agree;
        if (agree) {
            result["value"] = values.front();
        }
        emit_json("scn", std::move(params), std::move(result));
    } else if (g.csv()) {
        std::vector<std::vector<std::string>> rows = {{"m", "n", "method", "value"}};
        for (std::size_t i = 0; i < methods.size(); ++i) {
            rows.push_back({dec(args.m), dec(args.n), methods[i], values[i]});
        }
        rows.push_back({dec(args.m), dec(args.n), "agree", agree ? "true" : "false"});
        print_csv(rows);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < methods.size(); ++i) {
            rows.push_back({methods[i], values[i]});
        }
        print_aligned(rows);
        if (agree) {
            std::cout << "AGREE S(" << args.m << "," << args.n << ") = " << values.front() << "\n";
        } else {
            std::cout << "MISMATCH\n";
        }
    }
    return agree ? 0 : 1;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string what;
    unsigned max = 0;
    std::optional<unsigned> fixed_m;
    std::optional<unsigned> fixed_n;
};

struct Check {
    std::string label;   // "m=0 n=0" or "N=1"
    ordered_json keys;   // {"m":"0","n":"0"} or {"N":"1"}
    bool pass = false;
};

int run_verify(const GlobalOptions& g, const VerifyArgs& args) {
    const bool by_dimension = args.what == "spectrum";
    if (by_dimension && (args.fixed_m || args.fixed_n)) {
        std::cerr << "verify spectrum sweeps N directly; --m/--n do not apply\n";
        return 2;
    }

    // fail fast on infeasible sweeps before any output
    if (args.what == "s1" || args.what == "histogram") {
        const unsigned cap = g.cap_or(kDefaultEnumerationCap);
        if (args.max > cap) {
            throw cap_exceeded_error("verify " + args.what + ": --max " + dec(args.max) +
                                     " exceeds enumeration cap " + dec(cap) +
                                     " (use --max-cap-override)");
        }
    }
    if (by_dimension) {
        const unsigned cap = g.cap_or(kDefaultCubeCap);
        if (2 * args.max > cap) {
            throw cap_exceeded_error("verify spectrum: 2N=" + dec(2 * args.max) +
                                     " exceeds cube cap " + dec(cap) +
                                     " (use --max-cap-override)");
        }
    }

    std::vector<Check> checks;
    auto keys_mn = [](unsigned m, unsigned n) {
        ordered_json k;
        k["m"] = std::to_string(m);
        k["n"] = std::to_string(n);
        return k;
    };

    if (by_dimension) {
        for (unsigned N = 1; N <= args.max; ++N) {
            Check c;
            c.label = "N=" + dec(N);
            c.keys = ordered_json{{"N", std::to_string(N)}};
            try {
                orthogonality_report(N, g.cap_or(kDefaultCubeCap));
                c.pass = true;
            } catch (const claim_failed_error&) {
                c.pass = false;
            }
            checks.push_back(std::move(c));
        }
    } else {
        for (unsigned N = 0; N <= args.max; ++N) {
            std::vector<PathHistogram> sweep;
            if (args.what == "histogram") {
                sweep = histogram_sweep(N, g.cap_or(kDefaultEnumerationCap), g.threads);
            }
            for (unsigned m = 0; m <= N; ++m) {
                const unsigned n = N - m;
                if ((args.fixed_m && *args.fixed_m != m) || (args.fixed_n && *args.fixed_n != n)) {
                    continue;
                }
                const SCNIndex idx{m, n};
                Check c;
                c.label = "m=" + dec(m) + " n=" + dec(n);
                c.keys = keys_mn(m, n);
                if (args.what == "szily") {
                    c.pass = scn_von_szily(idx) == Int(scn_closed_form(idx));
                } else if (args.what == "s2") {
                    c.pass = scn_via_krawtchouk(idx) == scn_closed_form(idx);
                } else if (args.what == "s1") {
                    Int expected(scn_closed_form(idx));
                    if (m % 2 == 1) {
                        expected = -expected;
                    }
                    c.pass = signed_sum_enumerated(idx, g.cap_or(kDefaultEnumerationCap),
                                                   g.threads) == expected;
                } else {  // histogram
                    c.pass = sweep[m].enumerated == sweep[m].closed_form;
                }
                checks.push_back(std::move(c));
            }
        }
    }

    std::size_t passed = 0;
    const Check* first_failure = nullptr;
    for (const auto& c : checks) {
        if (c.pass) {
            ++passed;
        } else if (!first_failure) {
            first_failure = &c;
        }
    }

    if (g.json()) {
        ordered_json params;
        params["what"] = args.what;
        params["max"] = dec(args.max);
        if (args.fixed_m) {
            params["m"] = dec(*args.fixed_m);
        }
        if (args.fixed_n) {
            params["n"] = dec(*args.fixed_n);
        }
        ordered_json result;
        ordered_json list = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json row = c.keys;
            row["pass"] = c.pass;
            list.push_back(std::move(row));
        }
        result["checks"] = std::move(list);
        result["passed"] = dec(passed);
        result["total"] = dec(checks.size());
        result["first_failure"] = first_failure ? first_failure->keys : ordered_json(nullptr);
        emit_json("verify", std::move(params), std::move(result));
    } else if (g.csv()) {
        std::vector<std::vector<std::string>> rows;
        if (by_dimension) {
            rows.push_back({"what", "N", "status"});
            for (const auto& c : checks) {
                rows.push_back({args.what, c.keys["N"].get<std::string>(),
                                c.pass ? "PASS" : "FAIL"});
            }
        } else {
            rows.push_back({"what", "m", "n", "status"});
            for (const auto& c : checks) {
                rows.push_back({args.what, c.keys["m"].get<std::string>(),
                                c.keys["n"].get<std::string>(), c.pass ? "PASS" : "FAIL"});
            }
        }
        print_csv(rows);
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << args.what << " " << c.label << "\n";
        }
        std::cout << passed << "/" << checks.size() << " PASS";
        if (first_failure) {
            std::cout << " (first failure: " << args.what << " " << first_failure->label << ")";
        }
        std::cout << "\n";
    }
    return passed == checks.size() ? 0 : 1;
}

// ---------------------------------------------------------------- krawtchouk

struct KrawtchoukArgs {
    unsigned d = 0;
    std::optional<unsigned> j;
    std::optional<unsigned> x;
};

int run_krawtchouk(const GlobalOptions& g, const KrawtchoukArgs& args) {
    if (args.j.has_value() != args.x.has_value()) {
        std::cerr << "krawtchouk: j and x must be given together\n";
        return 2;
    }

    if (args.j) {
        const Int value = krawtchouk(args.d, *args.j, *args.x);
        if (g.json()) {
            ordered_json params;
            params["d"] = dec(args.d);
            params["j"] = dec(*args.j);
            params["x"] = dec(*args.x);
            ordered_json result;
            result["value"] = dec(value);
            emit_json("krawtchouk", std::move(params), std::move(result));
        } else if (g.csv()) {
            print_csv({{"d", "j", "x", "value"},
                       {dec(args.d), dec(*args.j), dec(*args.x), dec(value)}});
        } else {
            std::cout << dec(value) << "\n";
        }
        return 0;
    }

    const auto table = krawtchouk_table(args.d);
    if (g.json()) {
        ordered_json params;
        params["d"] = dec(args.d);
        ordered_json rows = ordered_json::array();
        for (const auto& row : table) {
            ordered_json r = ordered_json::array();
            for (const auto& v : row) {
                r.push_back(dec(v));
            }
            rows.push_back(std::move(r));
        }
        ordered_json result;
        result["table"] = std::move(rows);
        emit_json("krawtchouk", std::move(params), std::move(result));
        return 0;
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {g.csv() ? "j" : "j\\x"};
    for (unsigned x = 0; x <= args.d; ++x) {
        header.push_back(g.csv() ? "x=" + dec(x) : dec(x));
    }
    rows.push_back(std::move(header));
    for (unsigned j = 0; j <= args.d; ++j) {
        std::vector<std::string> row = {dec(j)};
        for (const auto& v : table[j]) {
            row.push_back(dec(v));
        }
        rows.push_back(std::move(row));
    }
    if (g.csv()) {
        print_csv(rows);
    } else {
        print_aligned(rows);
    }
    return 0;
}

// ---------------------------------------------------------------- paths

struct PathsArgs {
    unsigned m = 0;
    unsigned n = 0;
    bool list = false;
};

int run_paths(const GlobalOptions& g, const PathsArgs& args) {
    const SCNIndex idx{args.m, args.n};
    const unsigned cap = g.cap_or(kDefaultEnumerationCap);
    const PathHistogram hist = histogram(idx, cap, g.threads);
    const Int signed_sum = signed_sum_enumerated(idx, cap, g.threads);
    const Nat scn = scn_closed_form(idx);

    Int expected(scn);
    if (args.m % 2 == 1) {
        expected = -expected;
    }
    const bool match = hist.enumerated == hist.closed_form && signed_sum == expected;

    Nat total;
    for (const auto& c : hist.enumerated) {
        total += c;
    }

    std::vector<std::pair<std::string, unsigned>> listing;
    if (args.list) {
        PathStream stream(args.m + args.n, cap);
        while (auto p = stream.next()) {
            listing.emplace_back(p->str(), height_after(*p, 2 * args.m));
        }
    }

    if (g.json()) {
        ordered_json params;
        params["m"] = dec(args.m);
        params["n"] = dec(args.n);
        params["list"] = args.list;
        ordered_json result;
        result["count"] = dec(total);
        ordered_json enumerated = ordered_json::array();
        ordered_json closed = ordered_json::array();
        for (const auto& c : hist.enumerated) {
            enumerated.push_back(dec(c));
        }
        for (const auto& c : hist.closed_form) {
            closed.push_back(dec(c));
        }
        result["histogram"] = ordered_json{{"enumerated", std::move(enumerated)},
                                           {"closed_form", std::move(closed)}};
        result["signed_sum"] = dec(signed_sum);
        result["scn"] = dec(scn);
        result["match"] = match;
        if (args.list) {
            ordered_json paths = ordered_json::array();
            for (const auto& [steps, height] : listing) {
                paths.push_back(ordered_json{{"steps", steps}, {"height", dec(height)}});
            }
            result["paths"] = std::move(paths);
        }
        emit_json("paths", std::move(params), std::move(result));
    } else if (g.csv()) {
        std::vector<std::vector<std::string>> rows;
        if (args.list) {
            rows.push_back({"steps", "height"});
            for (const auto& [steps, height] : listing) {
                rows.push_back({steps, dec(height)});
            }
        } else {
            rows.push_back({"h", "enumerated", "closed_form"});
            for (std::size_t h = 0; h < hist.enumerated.size(); ++h) {
                rows.push_back({dec(h), dec(hist.enumerated[h]), dec(hist.closed_form[h])});
            }
        }
        print_csv(rows);
    } else {
        std::vector<std::vector<std::string>> rows = {{"h", "enumerated", "closed_form"}};
        for (std::size_t h = 0; h < hist.enumerated.size(); ++h) {
            rows.push_back({dec(h), dec(hist.enumerated[h]), dec(hist.closed_form[h])});
        }
        print_aligned(rows);
        std::cout << "total " << dec(total) << "\n";
        std::cout << "signed_sum " << dec(signed_sum) << "\n";
        std::cout << "scn " << dec(scn) << "\n";
        std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
        for (const auto& [steps, height] : listing) {
            std::cout << steps << " " << height << "\n";
        }
    }
    return match ? 0 : 1;
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const GlobalOptions& g, unsigned N) {
    const SpectrumReport report = orthogonality_report(N, g.cap_or(kDefaultCubeCap));

    auto set_to_strings = [](const std::set<Int>& s) {
        std::vector<std::string> out;
        for (const auto& v : s) {
            out.push_back(dec(v));
        }
        return out;
    };
    const auto eigen_set = set_to_strings(report.eigen_set);
    const auto scn_set = set_to_strings(report.scn_set);

    if (g.json()) {
        ordered_json params;
        params["N"] = dec(N);
        ordered_json result;
        result["d"] = dec(2 * N);
        ordered_json rows = ordered_json::array();
        for (const auto& mult : report.multiplicities) {
            rows.push_back(ordered_json{{"x", dec(mult.x)},
                                        {"eigenvalue", dec(mult.eigenvalue)},
                                        {"multiplicity", dec(mult.multiplicity)}});
        }
        result["rows"] = std::move(rows);
        result["eigen_set"] = eigen_set;
        result["scn_set"] = scn_set;
        result["match"] = true;  // a mismatch throws before any output
        emit_json("spectrum", std::move(params), std::move(result));
    } else if (g.csv()) {
        std::vector<std::vector<std::string>> rows = {{"x", "eigenvalue", "multiplicity"}};
        for (const auto& mult : report.multiplicities) {
            rows.push_back({dec(mult.x), dec(mult.eigenvalue), dec(mult.multiplicity)});
        }
        print_csv(rows);
    } else {
        std::vector<std::vector<std::string>> rows = {{"x", "eigenvalue", "multiplicity"}};
        for (const auto& mult : report.multiplicities) {
            rows.push_back({dec(mult.x), dec(mult.eigenvalue), dec(mult.multiplicity)});
        }
        print_aligned(rows);
        auto join = [](const std::vector<std::string>& parts) {
            std::string s = "{";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                s += parts[i];
                if (i + 1 < parts.size()) {
                    s += ",";
                }
            }
            return s + "}";
        };
        std::cout << "eigen_set " << join(eigen_set) << "\n";
        std::cout << "scn_set " << join(scn_set) << "\n";
        std::cout << "MATCH\n";
    }
    return 0;
}

// ---------------------------------------------------------------- involution

struct InvolutionArgs {
    unsigned m = 0;
    unsigned n = 0;
    std::string moves = "boundary-swap";
    unsigned k = 2;
};

int run_involution(const GlobalOptions& g, const InvolutionArgs& args) {
    MoveRelation relation = MoveRelation::boundary_swap();
    if (args.moves == "hamming") {
        relation = MoveRelation::hamming(args.k);
    } else if (args.moves == "complete") {
        relation = MoveRelation::complete();
    }

    const MatchingResult result =
        search_injection({args.m, args.n}, relation, g.cap_or(kDefaultMatchingCap));
    const WitnessReport report = export_witnesses(result);

    if (g.json()) {
        ordered_json params;
        params["m"] = dec(args.m);
        params["n"] = dec(args.n);
        params["moves"] = args.moves;
        params["k"] = dec(args.k);
        ordered_json out;
        out["relation"] = report.relation;
        out["minus_size"] = dec(result.minus_size);
        out["plus_size"] = dec(result.plus_size);
        out["matched"] = dec(report.pairs.size());
        out["deficiency"] = dec(report.deficiency);
        out["uncovered_count"] = dec(report.uncovered_count);
        out["scn"] = dec(report.scn);
        out["injection_found"] = report.injection_found;
        ordered_json pairs = ordered_json::array();
        for (const auto& [minus, plus] : report.pairs) {
            pairs.push_back(ordered_json::array({minus, plus}));
        }
        out["pairs"] = std::move(pairs);
        out["uncovered"] = report.uncovered;
        emit_json("involution", std::move(params), std::move(out));
    } else if (g.csv()) {
        std::vector<std::vector<std::string>> rows = {{"field", "value"}};
        rows.push_back({"m", dec(args.m)});
        rows.push_back({"n", dec(args.n)});
        rows.push_back({"relation", report.relation});
        rows.push_back({"minus_size", dec(result.minus_size)});
        rows.push_back({"plus_size", dec(result.plus_size)});
        rows.push_back({"matched", dec(report.pairs.size())});
        rows.push_back({"deficiency", dec(report.deficiency)});
        rows.push_back({"uncovered_count", dec(report.uncovered_count)});
        rows.push_back({"scn", dec(report.scn)});
        rows.push_back({"injection_found", report.injection_found ? "true" : "false"});
        for (const auto& [minus, plus] : report.pairs) {
            rows.push_back({"pair", minus + "->" + plus});
        }
        for (const auto& witness : report.uncovered) {
            rows.push_back({"uncovered", witness});
        }
        print_csv(rows);
    } else {
        print_aligned({{"m", dec(args.m)},
                       {"n", dec(args.n)},
                       {"relation", report.relation},
                       {"minus_size", dec(result.minus_size)},
                       {"plus_size", dec(result.plus_size)},
                       {"matched", dec(report.pairs.size())},
                       {"deficiency", dec(report.deficiency)},
                       {"uncovered_count", dec(report.uncovered_count)},
                       {"scn", dec(report.scn)}});
        std::cout << (report.injection_found ? "injection found"
                                             : "no injection under this relation")
                  << "\n";
        for (const auto& [minus, plus] : report.pairs) {
            std::cout << "pair " << minus << " -> " << plus << "\n";
        }
        for (const auto& witness : report.uncovered) {
            std::cout << "uncovered " << witness << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- macwilliams

struct MacwilliamsArgs {
    std::string file;
    std::optional<std::string> size;
};

int run_macwilliams(const GlobalOptions& g, const MacwilliamsArgs& args) {
    std::ifstream in(args.file);
    if (!in) {
        std::cerr << "macwilliams: cannot open weights file \"" << args.file << "\"\n";
        return 2;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "macwilliams: weights file is not valid JSON: " << e.what() << "\n";
        return 2;
    }

    if (!doc.contains("d") || !doc["d"].is_number_unsigned()) {
        throw domain_error("weights file: field \"d\" must be a non-negative integer");
    }
    const unsigned d = doc["d"].get<unsigned>();

    if (!doc.contains("counts") || !doc["counts"].is_array()) {
        throw domain_error("weights file: field \"counts\" must be an array of digit strings");
    }
    std::vector<Nat> counts;
    for (std::size_t i = 0; i < doc["counts"].size(); ++i) {
        const auto& entry = doc["counts"][i];
        if (!entry.is_string()) {
            throw domain_error("weights file: field \"counts[" + std::to_string(i) +
                               "]\" must be a digit string");
        }
        counts.push_back(parse_nat_field(entry.get<std::string>(),
                                         "counts[" + std::to_string(i) + "]"));
    }
    if (counts.size() != static_cast<std::size_t>(d) + 1) {
        throw domain_error("weights file: field \"counts\" must have d+1 = " +
                           std::to_string(d + 1) + " entries, got " +
                           std::to_string(counts.size()));
    }

    Nat size;
    if (args.size) {
        size = parse_nat_field(*args.size, "--size");
    } else {
        if (!doc.contains("size") || !doc["size"].is_string()) {
            throw domain_error("weights file: field \"size\" must be a digit string"
                               " (or pass --size)");
        }
        size = parse_nat_field(doc["size"].get<std::string>(), "size");
    }

    const WeightDistribution dist(d, std::move(counts));
    const std::vector<Rat> transform = macwilliams_transform(dist, size);

    if (g.json()) {
        ordered_json params;
        params["file"] = args.file;
        if (args.size) {
            params["size"] = *args.size;
        }
        ordered_json result;
        result["d"] = dec(d);
        result["size"] = dec(size);
        ordered_json values = ordered_json::array();
        for (const auto& v : transform) {
            values.push_back(v.str());
        }
        result["transform"] = std::move(values);
        emit_json("macwilliams", std::move(params), std::move(result));
    } else if (g.csv()) {
        std::vector<std::vector<std::string>> rows = {{"j", "value"}};
        for (std::size_t j = 0; j < transform.size(); ++j) {
            rows.push_back({dec(j), transform[j].str()});
        }
        print_csv(rows);
    } else {
        std::string line = "(";
        for (std::size_t j = 0; j < transform.size(); ++j) {
            line += transform[j].str();
            if (j + 1 < transform.size()) {
                line += ",";
            }
        }
        std::cout << line << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact super Catalan number computations and identity checks"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", global.threads, "worker threads for enumeration sweeps")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.add_option("--max-cap-override", global.cap_override,
                   "replace the invoked operation's default brute-force cap");
    app.set_version_flag("--version", std::string(kVersion));

    ScnArgs scn_args;
    auto* scn_cmd = app.add_subcommand("scn", "compute S(m,n) by a chosen method");
    scn_cmd->add_option("m", scn_args.m, "first index")->required();
    scn_cmd->add_option("n", scn_args.n, "second index")->required();
    scn_cmd->add_option("--method", scn_args.method, "computation route")
        ->check(CLI::IsMember({"closed", "szily", "krawtchouk", "paths"}))
        ->capture_default_str();
    scn_cmd->add_flag("--verify-all", scn_args.verify_all,
                      "run every method and require agreement");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "sweep an identity over all m+n <= max");
    verify_cmd
        ->add_option("what", verify_args.what,
                     "identity to check: szily, s1, s2, histogram, spectrum")
        ->required()
        ->check(CLI::IsMember({"szily", "s1", "s2", "histogram", "spectrum"}));
    verify_cmd->add_option("--max", verify_args.max, "sweep bound on m+n (or N for spectrum)")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--m", verify_args.fixed_m, "restrict the sweep to one m");
    verify_cmd->add_option("--n", verify_args.fixed_n, "restrict the sweep to one n");

    KrawtchoukArgs kraw_args;
    auto* kraw_cmd =
        app.add_subcommand("krawtchouk", "print K_j^d(x) or the full (d+1)x(d+1) table");
    kraw_cmd->add_option("d", kraw_args.d, "dimension")->required();
    kraw_cmd->add_option("j", kraw_args.j, "degree (with x: single value)");
    kraw_cmd->add_option("x", kraw_args.x, "evaluation point");

    PathsArgs paths_args;
    auto* paths_cmd =
        app.add_subcommand("paths", "height histogram of P_{m+n} against the closed form");
    paths_cmd->add_option("m", paths_args.m, "first index")->required();
    paths_cmd->add_option("n", paths_args.n, "second index")->required();
    paths_cmd->add_flag("--list", paths_args.list, "list every path with its height h_{2m}");

    unsigned spectrum_N = 0;
    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "eigenvalues of the distance-N graph of the 2N-cube vs signed S(m,n)");
    spectrum_cmd->add_option("N", spectrum_N, "half dimension")->required();

    InvolutionArgs involution_args;
    auto* involution_cmd = app.add_subcommand(
        "involution", "maximum matching between parity classes under a move relation");
    involution_cmd->add_option("m", involution_args.m, "first index")->required();
    involution_cmd->add_option("n", involution_args.n, "second index")->required();
    involution_cmd->add_option("--moves", involution_args.moves, "move relation")
        ->check(CLI::IsMember({"boundary-swap", "hamming", "complete"}))
        ->capture_default_str();
    involution_cmd->add_option("--k", involution_args.k, "distance bound for --moves hamming")
        ->capture_default_str();

    MacwilliamsArgs mac_args;
    auto* mac_cmd =
        app.add_subcommand("macwilliams", "transform a weight distribution read from JSON");
    mac_cmd->add_option("weights-file", mac_args.file, "JSON file with d, counts, size")
        ->required();
    mac_cmd->add_option("--size", mac_args.size, "code size |C| (overrides the file)");

    // let --format / --threads / --max-cap-override appear after the subcommand
    for (CLI::App* sub : {scn_cmd, verify_cmd, kraw_cmd, paths_cmd, spectrum_cmd,
                          involution_cmd, mac_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(scn_cmd)) {
            return run_scn(global, scn_args);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify(global, verify_args);
        }
        if (app.got_subcommand(kraw_cmd)) {
            return run_krawtchouk(global, kraw_args);
        }
        if (app.got_subcommand(paths_cmd)) {
            return run_paths(global, paths_args);
        }
        if (app.got_subcommand(spectrum_cmd)) {
            return run_spectrum(global, spectrum_N);
        }
        if (app.got_subcommand(involution_cmd)) {
            return run_involution(global, involution_args);
        }
        if (app.got_subcommand(mac_cmd)) {
            return run_macwilliams(global, mac_args);
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const cap_exceeded_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const eigen_mismatch_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const claim_failed_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
