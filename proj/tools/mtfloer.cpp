// mtfloer: HF+ of mapping tori of separating Dehn twist powers, computed by the
// page-by-page oracle and by the closed form.

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

#include "mtfloer/mtfloer.hpp"

using namespace mtfloer;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadParams = 2;
constexpr int kExitGate = 3;

std::string degree_lines(const GradedGroup& g)
{
    std::ostringstream os;
    for (auto it = g.entries().rbegin(); it != g.entries().rend(); ++it) {
        os << "  degree " << it->first << ": rank " << it->second.rank;
        if (!it->second.torsion.empty()) {
            os << " torsion";
            for (const auto& t : it->second.torsion)
                os << " " << t;
        }
        os << "\n";
    }
    return os.str();
}

std::pair<int, int> parse_range(const std::string& s)
{
    const auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    } catch (const std::exception&) {
        throw BadParams("bad range '" + s + "', expected A..B");
    }
}

Fault parse_fault(const std::string& s)
{
    if (s == "none")
        return Fault::none;
    if (s == "d1")
        return Fault::d1_drop_wedge;
    if (s == "d2")
        return Fault::d2_double;
    throw BadParams("unknown fault '" + s + "'");
}

void emit_group(const GradedGroup& g, const std::string& format, const std::string& title, json extra = json::object())
{
    if (format == "json") {
        json j = to_json(g);
        j["schema"] = kReportSchema;
        j.update(extra);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "degree,rank,torsion\n";
        for (const auto& [d, e] : g.entries()) {
            std::cout << d << "," << e.rank << ",";
            for (std::size_t i = 0; i < e.torsion.size(); ++i)
                std::cout << (i ? ";" : "") << e.torsion[i];
            std::cout << "\n";
        }
    } else {
        std::cout << title << ": " << to_string(g) << "\n" << degree_lines(g);
    }
}

// Lets "--n -2..2" and "--k -1" through: values starting with '-' would otherwise
// be read as flags.
std::vector<std::string> glue_negative_values(int argc, char** argv)
{
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < argc) {
            const std::string next = argv[i + 1];
            if (next.size() > 1 && next[0] == '-' && std::isdigit(static_cast<unsigned char>(next[1]))) {
                out.push_back(a + "=" + next);
                ++i;
                continue;
            }
        }
        out.push_back(a);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

struct Common {
    std::string format = "json";
    int pd_sign = 1;
    bool reverse_circles = false;
    std::string fault = "none";
};

ModelOptions model_options(const Common& c, int n)
{
    if (c.pd_sign != 1 && c.pd_sign != -1)
        throw BadParams("--pd-sign must be 1 or -1");
    ModelOptions opt;
    opt.pd_sign = c.pd_sign;
    opt.fault = parse_fault(c.fault);
    if (c.reverse_circles)
        for (int i = std::abs(n); i >= 1; --i)
            opt.circle_order.push_back(i);
    return opt;
}

int cmd_compute(int g, int n, int k, const std::string& method, const Common& c)
{
    const bool want_oracle = method == "oracle" || method == "both";
    const bool want_closed = method == "closed" || method == "both";
    const ClosedFormParams params = ClosedFormParams::make(g, n, k);

    std::optional<HomologyResult> oracle;
    std::optional<GradedGroup> closed;
    if (want_closed)
        closed = theorem_answer(params);
    if (want_oracle)
        oracle = oracle_hfplus(g, n, k, model_options(c, n));

    bool match = true;
    int shift_by = 0;
    if (oracle && closed) {
        match = oracle->group == *closed;
        shift_by = equal_up_to_shift(oracle->group, *closed).shift.value_or(0);
    }

    if (c.format == "json") {
        json j = {{"schema", kReportSchema}, {"g", g}, {"n", n}, {"k", k}};
        if (oracle)
            j["oracle"] = to_json(*oracle);
        if (closed) {
            json cj = to_json(*closed);
            cj["pipeline"] = "closed";
            cj["grading_convention"] = "X";
            cj["vanishes_by_adjunction"] = params.vanishes_by_adjunction();
            j["closed"] = cj;
        }
        if (oracle && closed) {
            j["match"] = match;
            j["shift"] = shift_by;
        }
        std::cout << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << kCsvHeader << "\n";
        const GradedGroup o = oracle ? oracle->group : GradedGroup{};
        const GradedGroup cl = closed ? *closed : GradedGroup{};
        for (Degree d : support_union(o, cl)) {
            std::cout << g << "," << n << "," << k << "," << d << ",";
            if (oracle)
                std::cout << o.rank(d);
            std::cout << ",";
            if (closed)
                std::cout << cl.rank(d);
            std::cout << ",";
            if (oracle && closed)
                std::cout << (match ? "true" : "false");
            std::cout << "\n";
        }
    } else {
        std::cout << "HF+ for g=" << g << " n=" << n << " k=" << k << " (X-convention grading)\n";
        if (oracle)
            std::cout << "oracle: " << to_string(oracle->group) << "  [gate " << oracle->gate << ", "
                      << oracle->generators << " E1 generators]\n"
                      << degree_lines(oracle->group);
        if (closed) {
            std::cout << "closed: " << to_string(*closed);
            if (params.vanishes_by_adjunction())
                std::cout << "  [vanishes by adjunction]";
            std::cout << "\n" << degree_lines(*closed);
        }
        if (oracle && closed)
            std::cout << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitGate;
}

int cmd_verify(int g_max, const std::string& n_range, const std::string& emit, bool timing, const Common& c)
{
    if (g_max < 2)
        throw BadParams("--g-max must be at least 2");
    const auto [lo, hi] = parse_range(n_range);
    if (lo > hi)
        throw BadParams("empty n range");
    ModelOptions opt = model_options(c, 0);
    const auto triples = sweep_triples(g_max, lo, hi);
    SweepReport report;
    if (c.reverse_circles) {
        // circle order depends on n, so evaluate per triple
        for (const auto& t : triples)
            report.entries.push_back(evaluate_triple(t, model_options(c, t.n)));
    } else {
        report = run_sweep(triples, opt);
    }

    if (c.format == "csv")
        std::cout << to_csv(report);
    else if (c.format == "table")
        std::cout << to_table(report);
    else
        std::cout << to_json(report, timing).dump(2) << "\n";

    if (!emit.empty()) {
        std::ofstream out(emit);
        if (!out)
            throw BadParams("cannot write " + emit);
        if (emit.size() >= 4 && emit.substr(emit.size() - 4) == ".csv")
            out << to_csv(report);
        else
            out << to_json(report, timing).dump(2) << "\n";
    }

    if (const SweepEntry* bad = report.first_failure()) {
        std::cerr << "first failing triple: g=" << bad->params.g << " n=" << bad->params.n << " k=" << bad->params.k
                  << "\n  oracle: " << to_string(bad->oracle) << "\n  closed: " << to_string(bad->closed)
                  << "\n  gate: " << bad->gate << "\n";
        return kExitGate;
    }
    return kExitOk;
}

int cmd_tables(const std::string& name, int n, int top, const Common& c)
{
    const ReferenceTable t = reference_tables(name, n, top);
    if (c.format == "json") {
        json j = {{"schema", kReportSchema}, {"table", t.name}, {"n", t.n}, {"degree_encoding", t.degree_encoding}};
        j["group"] = to_json(t.group);
        if (!t.levels.empty()) {
            json levels = json::array();
            for (const auto& [lvl, grp] : t.levels) {
                json l = to_json(grp);
                l["filtration"] = lvl;
                levels.push_back(l);
            }
            j["filtration_levels"] = levels;
        }
        std::cout << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "filtration,degree,rank\n";
        if (t.levels.empty())
            for (const auto& [d, e] : t.group.entries())
                std::cout << "," << d << "," << e.rank << "\n";
        for (const auto& [lvl, grp] : t.levels)
            for (const auto& [d, e] : grp.entries())
                std::cout << lvl << "," << d << "," << e.rank << "\n";
    } else {
        std::cout << t.name << " (n=" << t.n << ", degrees " << t.degree_encoding << ")\n";
        if (t.levels.empty())
            std::cout << "  " << to_string(t.group) << "\n";
        for (auto it = t.levels.rbegin(); it != t.levels.rend(); ++it)
            std::cout << "  j=" << it->first << ": " << to_string(it->second) << "\n";
    }
    return kExitOk;
}

int cmd_xgd(int g, int d, bool with_homology, bool left_handed, const Common& c)
{
    if (!with_homology) {
        const XModule x = build_X(g, d);
        const bool agrees = d < 0 || x.graded == sym_cohomology(g, d);
        emit_group(x.graded, c.format, "X(" + std::to_string(g) + "," + std::to_string(d) + ")",
                   {{"g", g}, {"d", d}, {"matches_sym_cohomology", agrees}});
        return agrees ? kExitOk : kExitGate;
    }
    ModelOptions opt;
    opt.pd_sign = c.pd_sign;
    const GradedGroup computed = homology(build_X_complex(g, d, left_handed ? -1 : 1, opt));
    const GradedGroup formula = hX_formula(g, d, left_handed);
    const bool match = computed == formula;
    if (c.format == "json") {
        json j = to_json(computed);
        j["schema"] = kReportSchema;
        j["g"] = g;
        j["d"] = d;
        j["left_handed"] = left_handed;
        j["formula"] = to_json(formula);
        j["match"] = match;
        std::cout << j.dump(2) << "\n";
    } else {
        emit_group(computed, c.format, "H(X(" + std::to_string(g) + "," + std::to_string(d) + "), d1)");
        if (c.format == "table")
            std::cout << "formula: " << to_string(formula) << "\n" << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitGate;
}

int cmd_corollary(int g, int n, const Common& c)
{
    const GradedGroup theorem = theorem_answer(g, n, g - 2);
    const GradedGroup corollary = corollary_answer(g, n);
    const GradedGroup topology = n > 0 ? surface_rel_cohomology(g, n) : surface_complement_cohomology(g, -n);
    const bool theorem_vs_corollary = theorem == corollary;
    const ShiftReport topo = equal_up_to_shift(topology, theorem);
    const bool topo_ok = topo.equal && (n < 0 || topo.shift == g - 2);
    const bool match = theorem_vs_corollary && topo_ok;
    if (c.format == "json") {
        json j = {{"schema", kReportSchema},
                  {"g", g},
                  {"n", n},
                  {"theorem", to_json(theorem)},
                  {"corollary", to_json(corollary)},
                  {n > 0 ? "relative_cohomology" : "complement_cohomology", to_json(topology)},
                  {"topology_shift", topo.shift.value_or(0)},
                  {"match", match}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "theorem:   " << to_string(theorem) << "\n"
                  << "corollary: " << to_string(corollary) << "\n"
                  << (n > 0 ? "H^*(Sigma_g, C): " : "H^*(Sigma_g \\ C): ") << to_string(topology) << "  shift "
                  << topo.shift.value_or(0) << "\n"
                  << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitGate;
}

int cmd_degree_shift(int n, int k, std::optional<int> x, const Common& c)
{
    const int arg = degree_shift_argmax(n, k);
    json j = {{"schema", kReportSchema}, {"n", n}, {"k", k}, {"argmax", arg}};
    auto frac = [](const Rational& r) {
        return json{{"num", boost::multiprecision::numerator(r).str()}, {"den", boost::multiprecision::denominator(r).str()}};
    };
    if (x) {
        const Rational v = degree_shift(n, k, *x);
        j["x"] = *x;
        j["value"] = frac(v);
    }
    j["max_value"] = frac(degree_shift(n, k, arg));
    if (c.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        if (x)
            std::cout << "deg(F) at x=" << *x << ": " << degree_shift(n, k, *x) << "\n";
        std::cout << "argmax x = " << arg << ", max degree " << degree_shift(n, k, arg) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"HF+ of mapping tori of powers of a genus-1 separating Dehn twist", "mtfloer"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json, table or csv")
            ->check(CLI::IsMember({"json", "table", "csv"}));
        sub->add_option("--pd-sign", common.pd_sign, "sign of PD(gamma) = +-b1");
    };

    int g = 0, n = 0, k = 0, d = 0, g_max = 0, top = 6;
    std::string method = "both", n_range = "-2..2", emit, table_name;
    bool with_homology = false, left_handed = false, timing = false;
    std::optional<int> x;

    auto* compute = app.add_subcommand("compute", "HF+ at one (g, n, k)");
    compute->add_option("--g", g)->required();
    compute->add_option("--n", n)->required();
    compute->add_option("--k", k)->required();
    compute->add_option("--method", method)->check(CLI::IsMember({"oracle", "closed", "both"}));
    compute->add_option("--inject-fault", common.fault, "test hook: none, d1 or d2");
    compute->add_flag("--reverse-circles", common.reverse_circles);
    add_common(compute);

    auto* verify = app.add_subcommand("verify", "oracle vs closed form over a parameter grid");
    verify->add_option("--g-max", g_max)->required();
    verify->add_option("--n", n_range, "twist range A..B (0 skipped)");
    verify->add_option("--emit", emit, "also write the report to this file (.csv or .json)");
    verify->add_flag("--timing", timing, "include wall times in JSON");
    verify->add_option("--inject-fault", common.fault, "test hook: none, d1 or d2");
    verify->add_flag("--reverse-circles", common.reverse_circles);
    add_common(verify);

    auto* tables = app.add_subcommand("tables", "reference tables");
    tables->add_option("name", table_name)->required();
    tables->add_option("--n", n)->default_val(1);
    tables->add_option("--top", top, "top degree for HF+ towers")->default_val(6);
    add_common(tables);

    auto* xgd = app.add_subcommand("xgd", "the module X(g, d) and its d1 homology");
    xgd->add_option("--g", g)->required();
    xgd->add_option("--d", d)->required();
    xgd->add_flag("--homology", with_homology);
    xgd->add_flag("--left-handed", left_handed, "d1 on E+ (n < 0)");
    add_common(xgd);

    auto* corollary = app.add_subcommand("corollary", "the s_{g-2} case against surface cohomology");
    corollary->add_option("--g", g)->required();
    corollary->add_option("--n", n)->required();
    add_common(corollary);

    auto* dshift = app.add_subcommand("degree-shift", "degree of the surgery cobordism maps");
    dshift->add_option("--n", n)->required();
    dshift->add_option("--k", k)->required();
    dshift->add_option("--x", x);
    add_common(dshift);

    try {
        app.parse(glue_negative_values(argc, argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (*compute)
            return cmd_compute(g, n, k, method, common);
        if (*verify)
            return cmd_verify(g_max, n_range, emit, timing, common);
        if (*tables)
            return cmd_tables(table_name, n, top, common);
        if (*xgd)
            return cmd_xgd(g, d, with_homology, left_handed, common);
        if (*corollary)
            return cmd_corollary(g, n, common);
        if (*dshift)
            return cmd_degree_shift(n, k, x, common);
    } catch (const GateFailure& e) {
        std::cerr << "gate failure: " << e.what() << "\n";
        return kExitGate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitOk;
}
