#pragma once

// Finitely supported graded abelian groups.
//
// A GradedGroup stores, per integer degree, a free rank and a list of torsion
// coefficients in Smith form (t1 | t2 | ...). Degrees with neither rank nor
// torsion are never stored, so structural equality is group isomorphism in
// each degree.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "integer.hpp"

namespace mtfloer {

using Degree = int;
using Rank = std::int64_t;

struct GradedEntry {
    Rank rank = 0;
    std::vector<Integer> torsion;

    bool empty() const { return rank == 0 && torsion.empty(); }
    bool operator==(const GradedEntry&) const = default;
};

/// Rewrites a list of positive torsion orders as its divisibility chain, dropping units.
inline std::vector<Integer> normalize_torsion(std::vector<Integer> t)
{
    for (auto& x : t)
        x = abs_value(x);
    std::erase_if(t, [](const Integer& x) { return x == 0 || x == 1; });
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            Integer g = gcd_value(t[i], t[j]);
            Integer l = lcm_value(t[i], t[j]);
            t[i] = std::move(g);
            t[j] = std::move(l);
        }
    }
    std::erase_if(t, [](const Integer& x) { return x == 1; });
    return t;
}

class GradedGroup {
public:
    GradedGroup() = default;

    GradedGroup(std::initializer_list<std::pair<Degree, Rank>> ranks)
    {
        for (const auto& [deg, r] : ranks)
            add(deg, r);
    }

    /// G_(degree) for G free of the given rank.
    static GradedGroup concentrated(Degree degree, Rank rank)
    {
        GradedGroup g;
        g.add(degree, rank);
        return g;
    }

    void add(Degree degree, Rank rank, std::vector<Integer> torsion = {})
    {
        if (rank < 0)
            throw BadParams("negative rank in graded group");
        if (rank == 0 && torsion.empty())
            return;
        auto& e = entries_[degree];
        e.rank += rank;
        if (!torsion.empty()) {
            e.torsion.insert(e.torsion.end(), torsion.begin(), torsion.end());
            e.torsion = normalize_torsion(std::move(e.torsion));
        }
        if (e.empty())
            entries_.erase(degree);
    }

    const std::map<Degree, GradedEntry>& entries() const { return entries_; }

    Rank rank(Degree degree) const
    {
        auto it = entries_.find(degree);
        return it == entries_.end() ? 0 : it->second.rank;
    }

    std::vector<Integer> torsion(Degree degree) const
    {
        auto it = entries_.find(degree);
        return it == entries_.end() ? std::vector<Integer>{} : it->second.torsion;
    }

    Rank total_rank() const
    {
        Rank r = 0;
        for (const auto& [deg, e] : entries_)
            r += e.rank;
        return r;
    }

    bool is_zero() const { return entries_.empty(); }

    bool torsion_free() const
    {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const auto& kv) { return kv.second.torsion.empty(); });
    }

    Degree min_degree() const { return entries_.begin()->first; }
    Degree max_degree() const { return entries_.rbegin()->first; }

    bool operator==(const GradedGroup&) const = default;

private:
    std::map<Degree, GradedEntry> entries_;
};

inline GradedGroup direct_sum(const GradedGroup& a, const GradedGroup& b)
{
    GradedGroup out = a;
    for (const auto& [deg, e] : b.entries())
        out.add(deg, e.rank, e.torsion);
    return out;
}

inline GradedGroup operator+(const GradedGroup& a, const GradedGroup& b) { return direct_sum(a, b); }

/// n copies of a.
inline GradedGroup multiple(const GradedGroup& a, Rank n)
{
    GradedGroup out;
    for (Rank i = 0; i < n; ++i)
        out = direct_sum(out, a);
    return out;
}

inline GradedGroup tensor(const GradedGroup& a, const GradedGroup& b)
{
    if (!a.torsion_free() || !b.torsion_free())
        throw TorsionUnsupported("tensor product is only defined here for free graded groups");
    GradedGroup out;
    for (const auto& [da, ea] : a.entries())
        for (const auto& [db, eb] : b.entries())
            out.add(da + db, ea.rank * eb.rank);
    return out;
}

inline GradedGroup shift(const GradedGroup& a, Degree s)
{
    GradedGroup out;
    for (const auto& [deg, e] : a.entries())
        out.add(deg + s, e.rank, e.torsion);
    return out;
}

struct ShiftReport {
    bool equal = false;
    std::optional<Degree> shift;
};

/// Finds s with shift(a, s) == b. The zero group matches only itself, with s = 0.
inline ShiftReport equal_up_to_shift(const GradedGroup& a, const GradedGroup& b)
{
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero())
            return {true, 0};
        return {false, std::nullopt};
    }
    const Degree s = b.min_degree() - a.min_degree();
    if (shift(a, s) == b)
        return {true, s};
    return {false, std::nullopt};
}

/// H^*(n disjoint circles), bottom class placed in degree `shift_by`.
inline GradedGroup circles_cohomology(Rank n, Degree shift_by = 0)
{
    if (n < 0)
        throw BadParams("circle count must be nonnegative");
    GradedGroup g;
    g.add(shift_by, n);
    g.add(shift_by + 1, n);
    return g;
}

/// H_*(count disjoint copies of S^{2p-1}).
inline GradedGroup odd_spheres_homology(Rank count, int p)
{
    if (count < 0 || p < 1)
        throw BadParams("odd_spheres_homology needs count >= 0 and p >= 1");
    GradedGroup g;
    g.add(0, count);
    g.add(2 * p - 1, count);
    return g;
}

inline Rank euler_characteristic(const GradedGroup& g)
{
    Rank chi = 0;
    for (const auto& [deg, e] : g.entries())
        chi += (deg % 2 == 0 ? 1 : -1) * e.rank;
    return chi;
}

// JSON: {"degrees":[{"degree":d,"rank":r,"torsion":[...]}, ...]} in ascending degree.
// Torsion orders that do not fit in 64 bits are written as decimal strings.

inline nlohmann::json to_json(const GradedGroup& g)
{
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& [deg, e] : g.entries()) {
        nlohmann::json tors = nlohmann::json::array();
        for (const auto& t : e.torsion) {
            if (t <= std::numeric_limits<std::int64_t>::max())
                tors.push_back(static_cast<std::int64_t>(t));
            else
                tors.push_back(t.str());
        }
        degrees.push_back({{"degree", deg}, {"rank", e.rank}, {"torsion", tors}});
    }
    return {{"degrees", degrees}};
}

inline GradedGroup graded_group_from_json(const nlohmann::json& j)
{
    GradedGroup g;
    for (const auto& d : j.at("degrees")) {
        std::vector<Integer> tors;
        for (const auto& t : d.at("torsion")) {
            if (t.is_string())
                tors.emplace_back(t.get<std::string>());
            else
                tors.emplace_back(t.get<std::int64_t>());
        }
        g.add(d.at("degree").get<Degree>(), d.at("rank").get<Rank>(), std::move(tors));
    }
    return g;
}

/// Human-readable form, e.g. "Z^3_(3) + Z^7_(2)", highest degree first.
inline std::string to_string(const GradedGroup& g)
{
    if (g.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = g.entries().rbegin(); it != g.entries().rend(); ++it) {
        const auto& [deg, e] = *it;
        if (e.rank > 0) {
            os << (first ? "" : " + ") << "Z";
            if (e.rank > 1)
                os << "^" << e.rank;
            os << "_(" << deg << ")";
            first = false;
        }
        for (const auto& t : e.torsion) {
            os << (first ? "" : " + ") << "Z/" << t << "_(" << deg << ")";
            first = false;
        }
    }
    return os.str();
}

} // namespace mtfloer
