#pragma once

// Model pages of the knot complex for (Y, K~) = M_{+-n} # (2g-2)(S^1 x S^2) and
// the truncated spectral-sequence computation of H_*(C{i < 0, j >= k}).
//
// A page generator is a surface-summand element omega (x) U^p, omega in
// Lambda^* H^1(Sigma_g), or a circles-summand element eta (x) [circle c, bit] (x) U^p
// with eta in Lambda^* H^1 of the genus-(g-1) factor (symbols a2, b2, ..., ag, bg).
// With F the centered exterior degree:
//   i = -p,  j = F - p,  model grading = F (+ bit + eps(n) on circles) - 2p.
// Results are reported in the X-convention, model grading + 2, under which the
// surface part of the region is literally X(g, g-1-k).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "exterior_algebra.hpp"
#include "graded_group.hpp"
#include "integer_homology.hpp"

namespace mtfloer {

constexpr Degree kXConventionOffset = 2;

/// Grading shift of the circles factor: 0 for right-handed twists, -1 for left-handed.
inline int epsilon(int n) { return n > 0 ? 0 : -1; }

struct RegionSpec {
    int g = 0;
    int n = 0;
    int k = 0;

    int d() const { return g - 1 - k; }
    int twist_count() const { return std::abs(n); }

    static RegionSpec make(int g, int n, int k)
    {
        if (g < 2)
            throw BadGenus("genus must be at least 2, got " + std::to_string(g));
        if (n == 0)
            throw ZeroTwist("twist power n must be nonzero");
        if (k < 1 || k > g - 1)
            throw BadParams("region needs 1 <= k <= g-1, got k=" + std::to_string(k));
        return {g, n, k};
    }
};

enum class Summand { surface, circles };

struct PageGenerator {
    Summand summand = Summand::surface;
    Mask label = 0;   // surface: symbols of Sigma_g; circles: symbols a2..bg only
    int circle = 0;   // 1..|n|, circles only
    int bit = 0;      // cohomological degree on the circle, circles only
    int u_power = 0;  // p

    int filtration_base(int g) const
    {
        return summand == Summand::surface ? centered_grading(label, g) : centered_grading(label, g - 1);
    }
    int i() const { return -u_power; }
    int j(int g) const { return filtration_base(g) - u_power; }

    Degree model_grading(int g, int n) const
    {
        Degree base = filtration_base(g);
        if (summand == Summand::circles)
            base += bit + epsilon(n);
        return base - 2 * u_power;
    }
    Degree x_grading(int g, int n) const { return model_grading(g, n) + kXConventionOffset; }

    bool operator<(const PageGenerator& o) const
    {
        return std::tie(summand, label, circle, bit, u_power) < std::tie(o.summand, o.label, o.circle, o.bit, o.u_power);
    }
    bool operator==(const PageGenerator&) const = default;

    std::string name() const
    {
        std::ostringstream os;
        if (summand == Summand::surface)
            os << "S[" << monomial_name(label) << "]";
        else
            os << "C[" << monomial_name(label) << "|c" << circle << "^" << bit << "]";
        os << "U^" << u_power;
        return os.str();
    }
};

enum class Fault {
    none,
    d1_drop_wedge, // omit the PD(gamma) ^ omega term of d1
    d2_double,     // realize d2 as twice the identity
};

struct ModelOptions {
    int pd_sign = 1;              // PD(gamma) = pd_sign * b1
    std::vector<int> circle_order; // permutation of 1..|n|; first entry pairs with the surface
    Fault fault = Fault::none;

    std::vector<int> circles_for(int count) const
    {
        if (circle_order.empty()) {
            std::vector<int> order(count);
            std::iota(order.begin(), order.end(), 1);
            return order;
        }
        std::vector<int> sorted = circle_order;
        std::sort(sorted.begin(), sorted.end());
        for (int c = 0; c < count; ++c)
            if (static_cast<int>(sorted.size()) != count || sorted[c] != c + 1)
                throw BadParams("circle_order must be a permutation of 1..|n|");
        return circle_order;
    }
};

// ---------------------------------------------------------------------------
// Knot Floer homology tables

/// Filtration level -> graded group.
using FilteredGroup = std::map<int, GradedGroup>;

inline GradedGroup total(const FilteredGroup& f)
{
    GradedGroup out;
    for (const auto& [j, g] : f)
        out = direct_sum(out, g);
    return out;
}

inline FilteredGroup filtered_tensor(const FilteredGroup& a, const FilteredGroup& b)
{
    FilteredGroup out;
    for (const auto& [ja, ga] : a)
        for (const auto& [jb, gb] : b) {
            auto t = tensor(ga, gb);
            if (!t.is_zero())
                out[ja + jb] = direct_sum(out[ja + jb], t);
        }
    return out;
}

/// Masks of the genus-(g-1) factor of Sigma_g (symbols a2..bg).
inline std::vector<Mask> complement_factor_monomials(int g)
{
    std::vector<Mask> out;
    const Mask full = (Mask{1} << (2 * g)) - 1;
    for (Mask m = 0; m <= full; ++m)
        if ((m & Mask{0b11}) == 0)
            out.push_back(m);
    return out;
}

inline std::vector<Mask> all_monomials(int g)
{
    std::vector<Mask> out;
    const Mask full = (Mask{1} << (2 * g)) - 1;
    for (Mask m = 0; m <= full; ++m)
        out.push_back(m);
    return out;
}

/// Knot Floer homology of K~ in M_n # (2g-2)(S^1 x S^2): Lambda^* H^1(Sigma_g) plus
/// Lambda^* H^1(Sigma_{g-1}) (x) H^*(n circles), circles graded {0,1} (n > 0)
/// or {-1,0} (n < 0) and sitting in filtration 0. g = 1 gives (M_n, K) itself.
inline FilteredGroup knot_floer_model(int g, int n)
{
    if (g < 1)
        throw BadGenus("knot_floer_model needs g >= 1");
    if (n == 0)
        throw ZeroTwist("twist power n must be nonzero");
    check_genus(g);
    FilteredGroup out;
    for (Mask m : all_monomials(g)) {
        const int f = centered_grading(m, g);
        out[f].add(f, 1);
    }
    for (Mask m : complement_factor_monomials(g)) {
        const int f = centered_grading(m, g - 1);
        out[f].add(f + epsilon(n), std::abs(n));
        out[f].add(f + 1 + epsilon(n), std::abs(n));
    }
    return out;
}

inline FilteredGroup build_hfk(int g, int n)
{
    if (g < 2)
        throw BadGenus("build_hfk needs g >= 2, got " + std::to_string(g));
    return knot_floer_model(g, n);
}

/// Spectral-sequence collapse of the knot model to HF-hat(Y): the only differential
/// is contraction with gamma, on E- (n > 0: Lambda^1 -> Lambda^0 in the torus factor)
/// or on E+ (n < 0: Lambda^2 -> Lambda^1).
inline FreeComplex hf_hat_collapse_complex(int g, int n)
{
    if (g < 1)
        throw BadGenus("hf_hat_collapse_complex needs g >= 1");
    if (n == 0)
        throw ZeroTwist("twist power n must be nonzero");
    ComplexBuilder b;
    std::map<Mask, ComplexBuilder::Id> surface;
    for (Mask m : all_monomials(g))
        surface[m] = b.add_generator(centered_grading(m, g), "S[" + monomial_name(m) + "]");
    for (Mask m : complement_factor_monomials(g))
        for (int c = 1; c <= std::abs(n); ++c)
            for (int bit = 0; bit <= 1; ++bit)
                b.add_generator(centered_grading(m, g - 1) + bit + epsilon(n),
                                "C[" + monomial_name(m) + "|c" + std::to_string(c) + "^" + std::to_string(bit) + "]");
    const EHalf active = n > 0 ? EHalf::minus : EHalf::plus;
    for (Mask m : all_monomials(g)) {
        if (split_E(m) != active)
            continue;
        const ExtVector image = contract(ExtVector::monomial(g, m));
        for (const auto& [tm, coeff] : image.terms())
            b.add_boundary(surface.at(m), surface.at(tm), coeff);
    }
    return b.build();
}

struct ReferenceTable {
    std::string name;
    int n = 0;
    FilteredGroup levels; // empty for unfiltered tables
    GradedGroup group;
    std::string degree_encoding = "integer"; // or "half_integer_slot": slot s is degree s + 1/2
};

inline std::vector<std::string> reference_table_names()
{
    return {"hf_hat_Mn", "hf_hat_M_neg_n", "hfplus_Z", "hfplus_Mn", "hfk_M1", "hfk_M_neg_1", "hfk_Mn", "hfk_M_neg_n"};
}

/// Published tables, transcribed. HF+ towers are cut off at `top_degree`.
inline ReferenceTable reference_tables(const std::string& name, int n, int top_degree = 6)
{
    ReferenceTable t;
    t.name = name;
    t.n = n;
    auto need_n = [&] {
        if (n < 1)
            throw BadParams("table " + name + " needs n >= 1");
    };
    auto hfk_table = [&](int m, bool left_handed) {
        FilteredGroup f;
        f[1] = GradedGroup{{1, 1}};
        f[0] = left_handed ? GradedGroup{{-1, m}, {0, m + 2}} : GradedGroup{{0, m + 2}, {1, m}};
        f[-1] = GradedGroup{{-1, 1}};
        return f;
    };
    if (name == "hf_hat_Mn") {
        need_n();
        t.group = GradedGroup{{1, n + 1}, {0, n + 1}};
    } else if (name == "hf_hat_M_neg_n") {
        need_n();
        t.group = GradedGroup{{0, n + 1}, {-1, n + 1}};
    } else if (name == "hfplus_Z") {
        need_n();
        t.degree_encoding = "half_integer_slot";
        t.group.add(0, n);
        for (int s = 1; s <= top_degree; ++s)
            t.group.add(s, 1);
    } else if (name == "hfplus_Mn") {
        need_n();
        t.group.add(0, n + 1);
        for (int s = 1; s <= top_degree; ++s)
            t.group.add(s, 2);
    } else if (name == "hfk_M1") {
        t.n = 1;
        t.levels = hfk_table(1, false);
    } else if (name == "hfk_M_neg_1") {
        t.n = 1;
        t.levels = hfk_table(1, true);
    } else if (name == "hfk_Mn") {
        need_n();
        t.levels = hfk_table(n, false);
    } else if (name == "hfk_M_neg_n") {
        need_n();
        t.levels = hfk_table(n, true);
    } else {
        throw UnknownTable("unknown table: " + name);
    }
    if (!t.levels.empty())
        t.group = total(t.levels);
    return t;
}

// ---------------------------------------------------------------------------
// E1 page on the region C{i < 0, j >= k}

struct E1Region {
    RegionSpec spec;
    std::vector<PageGenerator> generators; // complex basis order within each degree follows this order
    FreeComplex complex;                   // model grading
    GradedGroup surface_graded;            // surface generators, X-convention
};

namespace detail {

inline bool in_region(const PageGenerator& gen, int g, int k) { return gen.u_power >= 1 && gen.j(g) >= k; }

// Surface generators omega (x) U^p with 1 <= p <= F - floor_k and d1 on the active half:
//   d1(omega U^p) = iota_gamma(omega) U^p + PD(gamma) ^ omega U^{p+1},
// dropping terms that leave j >= floor_k.
inline void add_surface_page(ComplexBuilder& b, std::map<PageGenerator, ComplexBuilder::Id>& ids,
                             std::vector<PageGenerator>& gens, int g, int n, int floor_k, Degree offset,
                             const ModelOptions& opt)
{
    const int first = static_cast<int>(gens.size());
    for (Mask m : all_monomials(g)) {
        const int f = centered_grading(m, g);
        for (int p = 1; p <= f - floor_k; ++p) {
            PageGenerator gen{Summand::surface, m, 0, 0, p};
            ids[gen] = b.add_generator(gen.model_grading(g, n) + offset, gen.name());
            gens.push_back(gen);
        }
    }
    const EHalf active = n > 0 ? EHalf::minus : EHalf::plus;
    const ExtVector pd = ExtVector::monomial(g, Mask{1} << symbol_index_b(1), opt.pd_sign);
    for (std::size_t idx = first; idx < gens.size(); ++idx) {
        const PageGenerator src = gens[idx];
        if (split_E(src.label) != active)
            continue;
        const ExtVector omega = ExtVector::monomial(g, src.label);
        auto add_terms = [&](const ExtVector& image, int p) {
            for (const auto& [m, coeff] : image.terms()) {
                PageGenerator tgt{Summand::surface, m, 0, 0, p};
                if (!in_region(tgt, g, floor_k))
                    continue;
                b.add_boundary(ids.at(src), ids.at(tgt), coeff);
            }
        };
        add_terms(contract(omega), src.u_power);
        if (opt.fault != Fault::d1_drop_wedge)
            add_terms(wedge(pd, omega), src.u_power + 1);
    }
}

} // namespace detail

/// All page generators of the truncated region and the d1 differential on them.
/// Circle generators are d1-cycles.
inline E1Region build_E1_region(const RegionSpec& spec, const ModelOptions& opt = {})
{
    const int g = spec.g;
    const int n = spec.n;
    const int k = spec.k;
    ComplexBuilder b;
    std::map<PageGenerator, ComplexBuilder::Id> ids;
    E1Region region{spec, {}, {}, {}};
    detail::add_surface_page(b, ids, region.generators, g, n, k, 0, opt);
    for (const auto& gen : region.generators)
        region.surface_graded.add(gen.x_grading(g, n), 1);

    for (int c : opt.circles_for(spec.twist_count()))
        for (Mask m : complement_factor_monomials(g)) {
            const int f = centered_grading(m, g - 1);
            for (int bit = 0; bit <= 1; ++bit)
                for (int p = 1; p <= f - k; ++p) {
                    PageGenerator gen{Summand::circles, m, c, bit, p};
                    ids[gen] = b.add_generator(gen.model_grading(g, n), gen.name());
                    region.generators.push_back(gen);
                }
        }
    region.complex = b.build();

    // Surface part of the region is X(g, d) under p = j + 1, shifted by one U-power.
    const XModule x = build_X(g, spec.d());
    if (x.graded != region.surface_graded)
        throw GateFailure("surface region does not match X(g,d): " + to_string(region.surface_graded) + " vs "
                          + to_string(x.graded));
    const std::size_t bound =
        static_cast<std::size_t>((Rank{1} << (2 * g)) + 2 * spec.twist_count() * (Rank{1} << (2 * (g - 1)))) * g;
    if (region.generators.size() > bound)
        throw GateFailure("region exceeds its finiteness bound");
    return region;
}

/// (X(g, d), d1) as a standalone complex in X-convention grading. n only selects
/// the active half (sign); 0 <= d <= g - 1.
inline FreeComplex build_X_complex(int g, int d, int n, const ModelOptions& opt = {})
{
    if (g < 2)
        throw BadGenus("build_X_complex needs g >= 2");
    if (d < 0 || d > g - 1)
        throw BadParams("build_X_complex needs 0 <= d <= g-1");
    if (n == 0)
        throw ZeroTwist("twist power n must be nonzero");
    ComplexBuilder b;
    std::map<PageGenerator, ComplexBuilder::Id> ids;
    std::vector<PageGenerator> gens;
    detail::add_surface_page(b, ids, gens, g, n, g - 1 - d, kXConventionOffset, opt);
    return b.build();
}

// ---------------------------------------------------------------------------
// E2 page and d2

struct E2Page {
    RegionSpec spec;
    GradedGroup fixed;                 // X(g-1,d-1) (x) H^*(S^1 u S^1)[eps] + Lambda^{2g-2-d}_(g-d), X-convention
    std::vector<PageGenerator> active; // eta (x) [circle, bit] (x) U^p on the remaining |n|-1 circles
    GradedGroup active_graded;
    FreeComplex d2complex;             // X-convention grading
};

inline E2Page build_E2_symbolic(const RegionSpec& spec, const ModelOptions& opt = {})
{
    const int g = spec.g;
    const int n = spec.n;
    const int k = spec.k;
    const int d = spec.d();
    E2Page e2{spec, {}, {}, {}, {}};
    e2.fixed = tensor(build_X(g - 1, d - 1).graded, circles_cohomology(2, epsilon(n)))
               + lambda_piece(g - 1, 2 * g - 2 - d, g - d);

    const std::vector<int> circles = opt.circles_for(spec.twist_count());
    ComplexBuilder b;
    std::map<PageGenerator, ComplexBuilder::Id> ids;
    for (std::size_t ci = 1; ci < circles.size(); ++ci)
        for (Mask m : complement_factor_monomials(g)) {
            const int f = centered_grading(m, g - 1);
            for (int bit = 0; bit <= 1; ++bit)
                for (int p = 1; p <= f - k; ++p) {
                    PageGenerator gen{Summand::circles, m, circles[ci], bit, p};
                    ids[gen] = b.add_generator(gen.x_grading(g, n), gen.name());
                    e2.active.push_back(gen);
                    e2.active_graded.add(gen.x_grading(g, n), 1);
                }
        }
    // d2: H^0 (x) U^p -> H^1 (x) U^{p+1}, the identity in the canonical basis.
    const Integer unit = opt.fault == Fault::d2_double ? 2 : 1;
    for (const auto& src : e2.active) {
        if (src.bit != 0)
            continue;
        PageGenerator tgt = src;
        tgt.bit = 1;
        tgt.u_power += 1;
        if (detail::in_region(tgt, g, k))
            b.add_boundary(ids.at(src), ids.at(tgt), unit);
    }
    e2.d2complex = b.build();
    return e2;
}

struct HomologyResult {
    GradedGroup group;
    std::string pipeline = "oracle";
    std::string page;
    std::string gate = "passed";
    int g = 0;
    int n = 0;
    int k = 0;
    std::string grading_convention = "X";
    std::size_t generators = 0;
};

inline nlohmann::json to_json(const HomologyResult& r)
{
    nlohmann::json j = to_json(r.group);
    j["pipeline"] = r.pipeline;
    j["page"] = r.page;
    j["gate"] = r.gate;
    j["g"] = r.g;
    j["n"] = r.n;
    j["k"] = r.k;
    j["grading_convention"] = r.grading_convention;
    return j;
}

/// d1 homology of the region, checked against the symbolic E2 page.
inline HomologyResult run_d1(const E1Region& region, const E2Page& e2)
{
    HomologyResult r;
    r.page = "E2";
    r.g = region.spec.g;
    r.n = region.spec.n;
    r.k = region.spec.k;
    r.generators = region.generators.size();
    r.group = shift(homology(region.complex), kXConventionOffset);
    const GradedGroup expected = e2.fixed + e2.active_graded;
    if (!r.group.torsion_free() || r.group != expected) {
        std::ostringstream os;
        os << "d1 rank gate failed at (g,n,k)=(" << r.g << "," << r.n << "," << r.k << "): computed "
           << to_string(r.group) << ", symbolic E2 " << to_string(expected);
        throw GateFailure(os.str());
    }
    return r;
}

/// E3 = E_infinity: the inert part plus homology of the truncated d2 complex.
inline HomologyResult run_d2(const RegionSpec& spec, const E2Page& e2)
{
    HomologyResult r;
    r.page = "E3";
    r.g = spec.g;
    r.n = spec.n;
    r.k = spec.k;
    r.generators = e2.active.size();
    const GradedGroup active = homology(e2.d2complex);
    if (!active.torsion_free()) {
        std::ostringstream os;
        os << "torsion in d2 homology at (g,n,k)=(" << spec.g << "," << spec.n << "," << spec.k
           << "): " << to_string(active);
        throw GateFailure(os.str());
    }
    r.group = e2.fixed + active;
    return r;
}

/// HF+(M(t_sigma^n), s_k) as H_*(C{i < 0, j >= |k|}), computed page by page.
inline HomologyResult oracle_hfplus(int g, int n, int k, const ModelOptions& opt = {})
{
    const RegionSpec spec = RegionSpec::make(g, n, std::abs(k));
    const E1Region region = build_E1_region(spec, opt);
    const E2Page e2 = build_E2_symbolic(spec, opt);
    run_d1(region, e2);
    HomologyResult r = run_d2(spec, e2);
    if (euler_characteristic(region.complex) != euler_characteristic(r.group))
        throw GateFailure("Euler characteristic of E1 region differs from the computed homology");
    r.page = "E_infinity";
    r.k = k;
    r.generators = region.generators.size();
    return r;
}

} // namespace mtfloer
