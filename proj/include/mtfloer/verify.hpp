#pragma once

// Parameter sweeps comparing the page-by-page oracle with the closed form, and
// the machine-readable report formats shared by the CLI.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "closed_form.hpp"
#include "graded_group.hpp"
#include "knot_model.hpp"

namespace mtfloer {

constexpr const char* kReportSchema = "1";

struct Triple {
    int g = 0;
    int n = 0;
    int k = 0;
    bool operator==(const Triple&) const = default;
};

struct SweepEntry {
    Triple params;
    GradedGroup oracle;
    GradedGroup closed;
    bool match = false;
    int shift = 0;
    std::string gate = "passed";
    double wall_time = 0.0; // seconds
};

struct SweepReport {
    std::vector<SweepEntry> entries;

    bool all_match() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const SweepEntry& e) { return e.match; });
    }

    const SweepEntry* first_failure() const
    {
        for (const auto& e : entries)
            if (!e.match)
                return &e;
        return nullptr;
    }
};

/// All (g, n, k) with 2 <= g <= g_max, n in [n_lo, n_hi] \ {0}, 1 <= k <= g-1.
inline std::vector<Triple> sweep_triples(int g_max, int n_lo, int n_hi)
{
    std::vector<Triple> out;
    for (int g = 2; g <= g_max; ++g)
        for (int n = n_lo; n <= n_hi; ++n) {
            if (n == 0)
                continue;
            for (int k = 1; k <= g - 1; ++k)
                out.push_back({g, n, k});
        }
    return out;
}

inline SweepEntry evaluate_triple(const Triple& t, const ModelOptions& opt = {})
{
    SweepEntry e;
    e.params = t;
    const auto start = std::chrono::steady_clock::now();
    e.closed = theorem_answer(t.g, t.n, t.k);
    try {
        e.oracle = oracle_hfplus(t.g, t.n, t.k, opt).group;
        e.match = e.oracle == e.closed && e.oracle.torsion_free();
    } catch (const GateFailure& err) {
        e.gate = std::string("failed: ") + err.what();
        e.match = false;
    }
    const ShiftReport s = equal_up_to_shift(e.oracle, e.closed);
    e.shift = s.shift.value_or(0);
    e.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return e;
}

/// Worker count: MTFLOER_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count()
{
    if (const char* env = std::getenv("MTFLOER_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Entries come back in input order regardless of completion order.
inline SweepReport run_sweep(const std::vector<Triple>& triples, const ModelOptions& opt = {},
                             unsigned threads = worker_count())
{
    SweepReport report;
    report.entries.resize(triples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < triples.size(); i = next++)
            report.entries[i] = evaluate_triple(triples[i], opt);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(triples.size())));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < n; ++w)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    return report;
}

inline std::set<Degree> support_union(const GradedGroup& a, const GradedGroup& b)
{
    std::set<Degree> out;
    for (const auto& [d, e] : a.entries())
        out.insert(d);
    for (const auto& [d, e] : b.entries())
        out.insert(d);
    return out;
}

inline nlohmann::json to_json(const SweepEntry& e, bool timing)
{
    nlohmann::json j = {{"g", e.params.g},
                        {"n", e.params.n},
                        {"k", e.params.k},
                        {"oracle", to_json(e.oracle)},
                        {"closed", to_json(e.closed)},
                        {"match", e.match},
                        {"shift", e.shift},
                        {"gate", e.gate}};
    if (timing)
        j["wall_time"] = e.wall_time;
    return j;
}

inline nlohmann::json to_json(const SweepReport& r, bool timing = false)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries)
        entries.push_back(to_json(e, timing));
    return {{"schema", kReportSchema}, {"all_match", r.all_match()}, {"entries", entries}};
}

inline const char* kCsvHeader = "g,n,k,degree,rank_oracle,rank_closed,match";

inline void append_csv_rows(std::ostream& os, const Triple& t, const GradedGroup& oracle, const GradedGroup& closed,
                            bool match)
{
    for (Degree d : support_union(oracle, closed))
        os << t.g << "," << t.n << "," << t.k << "," << d << "," << oracle.rank(d) << "," << closed.rank(d) << ","
           << (match ? "true" : "false") << "\n";
}

inline std::string to_csv(const SweepReport& r)
{
    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (const auto& e : r.entries)
        append_csv_rows(os, e.params, e.oracle, e.closed, e.match);
    return os.str();
}

inline std::string to_table(const SweepReport& r)
{
    std::ostringstream os;
    for (const auto& e : r.entries) {
        os << "g=" << e.params.g << " n=" << e.params.n << " k=" << e.params.k << "  "
           << (e.match ? "match   " : "MISMATCH") << "  oracle: " << to_string(e.oracle)
           << "  closed: " << to_string(e.closed);
        if (e.gate != "passed")
            os << "  gate " << e.gate;
        os << "\n";
    }
    os << r.entries.size() << " triples, " << (r.all_match() ? "all match" : "mismatches present") << "\n";
    return os.str();
}

} // namespace mtfloer
