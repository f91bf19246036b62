#pragma once

// Exterior algebra on H^1 of a closed genus-g surface.
//
// Generators a1, b1, ..., ag, bg are indexed 0..2g-1 in the canonical order
// a1 < b1 < a2 < b2 < ...; a monomial is the bitmask of its symbols, always
// written in that order. Every Koszul sign in the project is fixed by it.
// Lambda^i is placed in the centered degree i - g.

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graded_group.hpp"

namespace mtfloer {

using Mask = std::uint32_t;

constexpr int kMaxGenus = 15;

inline void check_genus(int g)
{
    if (g < 0 || g > kMaxGenus)
        throw BadGenus("genus out of range: " + std::to_string(g));
}

inline int symbol_index_a(int i) { return 2 * (i - 1); }
inline int symbol_index_b(int i) { return 2 * (i - 1) + 1; }

inline int ext_degree(Mask m) { return std::popcount(m); }
inline int centered_grading(Mask m, int g) { return ext_degree(m) - g; }

inline Rank binomial(int n, int k)
{
    if (k < 0 || k > n || n < 0)
        return 0;
    Rank r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Sign of (x_S) ^ (x_T) relative to x_{S u T} in canonical order; 0 if S and T overlap.
inline int koszul_sign(Mask s, Mask t)
{
    if (s & t)
        return 0;
    int swaps = 0;
    for (Mask rest = t; rest; rest &= rest - 1) {
        const int idx = std::countr_zero(rest);
        swaps += std::popcount(s >> (idx + 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

inline std::string symbol_name(int idx)
{
    return std::string(idx % 2 == 0 ? "a" : "b") + std::to_string(idx / 2 + 1);
}

inline std::vector<std::string> monomial_symbols(Mask m)
{
    std::vector<std::string> out;
    for (Mask rest = m; rest; rest &= rest - 1)
        out.push_back(symbol_name(std::countr_zero(rest)));
    return out;
}

inline std::string monomial_name(Mask m)
{
    if (m == 0)
        return "1";
    std::string s;
    for (const auto& sym : monomial_symbols(m))
        s += (s.empty() ? "" : "^") + sym;
    return s;
}

/// Parses "a2" / "b1" into a symbol index.
inline int parse_symbol(const std::string& name, int g)
{
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
        throw BadParams("bad exterior symbol: " + name);
    const int i = std::stoi(name.substr(1));
    if (i < 1 || i > g)
        throw BadParams("symbol " + name + " outside genus " + std::to_string(g));
    return name[0] == 'a' ? symbol_index_a(i) : symbol_index_b(i);
}

/// Integer combination of exterior monomials with a fixed genus context.
class ExtVector {
public:
    explicit ExtVector(int genus) : genus_(genus) { check_genus(genus); }

    static ExtVector monomial(int genus, Mask m, std::int64_t coeff = 1)
    {
        ExtVector v(genus);
        v.add_term(m, coeff);
        return v;
    }

    static ExtVector unit(int genus) { return monomial(genus, 0); }

    /// Single symbol such as "a1".
    static ExtVector symbol(int genus, const std::string& name)
    {
        return monomial(genus, Mask{1} << parse_symbol(name, genus));
    }

    int genus() const { return genus_; }
    const std::map<Mask, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coefficient(Mask m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(Mask m, std::int64_t coeff)
    {
        if (m >> (2 * genus_))
            throw GenusMismatch("monomial uses symbols outside genus " + std::to_string(genus_));
        if (coeff == 0)
            return;
        auto& c = terms_[m];
        c += coeff;
        if (c == 0)
            terms_.erase(m);
    }

    /// Exterior degree if homogeneous, -1 otherwise (or for zero).
    int homogeneous_degree() const
    {
        if (terms_.empty())
            return -1;
        const int deg = ext_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (ext_degree(m) != deg)
                return -1;
        return deg;
    }

    ExtVector& operator+=(const ExtVector& o)
    {
        require_same_genus(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    ExtVector& operator*=(std::int64_t s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
    friend ExtVector operator-(ExtVector a, const ExtVector& b) { return a += ExtVector(b) *= -1; }
    friend ExtVector operator*(std::int64_t s, ExtVector v) { return v *= s; }

    bool operator==(const ExtVector&) const = default;

    void require_same_genus(const ExtVector& o) const
    {
        if (o.genus_ != genus_)
            throw GenusMismatch("exterior vectors of genus " + std::to_string(genus_) + " and "
                                + std::to_string(o.genus_));
    }

private:
    int genus_;
    std::map<Mask, std::int64_t> terms_;
};

inline ExtVector wedge(const ExtVector& x, const ExtVector& y)
{
    x.require_same_genus(y);
    ExtVector out(x.genus());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            if (const int s = koszul_sign(mx, my))
                out.add_term(mx | my, s * cx * cy);
    return out;
}

/// Contraction with the dual of the generator at `index`; an antiderivation of degree -1.
inline ExtVector contract(const ExtVector& x, int index)
{
    ExtVector out(x.genus());
    const Mask bit = Mask{1} << index;
    for (const auto& [m, c] : x.terms()) {
        if (!(m & bit))
            continue;
        const int sign = std::popcount(m & (bit - 1)) % 2 == 0 ? 1 : -1;
        out.add_term(m & ~bit, sign * c);
    }
    return out;
}

/// iota_gamma: gamma is the class dual to a1.
inline ExtVector contract(const ExtVector& x) { return contract(x, symbol_index_a(1)); }

// E+/E- splitting by the degree of the Lambda^* H^1(Sigma_1) factor spanned by a1, b1.

enum class EHalf { plus, minus };

inline EHalf split_E(Mask m)
{
    const Mask torus = m & Mask{0b11};
    return std::popcount(torus) == 1 ? EHalf::minus : EHalf::plus;
}

inline GradedGroup lambda_group(int g)
{
    check_genus(g);
    GradedGroup out;
    for (int i = 0; i <= 2 * g; ++i)
        out.add(i - g, binomial(2 * g, i));
    return out;
}

/// Lambda^e H^1(Sigma_g) placed in a single degree.
inline GradedGroup lambda_piece(int g, int e, Degree degree)
{
    return GradedGroup::concentrated(degree, binomial(2 * g, e));
}

/// Lambda^{2g - codegree} H^1(Sigma_g) (x) U^{u_power} inside X(g, d).
struct XBasisElement {
    Mask monomial = 0;
    int codegree = 0;
    int u_power = 0;
    Degree grading = 0;
};

struct XModule {
    int genus = 0;
    int d = 0;
    std::vector<XBasisElement> basis;
    GradedGroup graded;
};

/// X(g, d) = sum_{i=0}^{d} Lambda^{2g-i} (x) Z[U]/U^{d+1-i}, with Lambda^{2g-i} (x) U^j in degree g - i - 2j.
/// d = -1 gives the zero module.
inline XModule build_X(int g, int d)
{
    check_genus(g);
    if (d < -1)
        throw BadParams("build_X needs d >= -1");
    XModule x{g, d, {}, {}};
    const Mask full = (Mask{1} << (2 * g)) - 1;
    for (int i = 0; i <= std::min(d, 2 * g); ++i) {
        for (Mask m = 0; m <= full; ++m) {
            if (ext_degree(m) != 2 * g - i)
                continue;
            for (int j = 0; j <= d - i; ++j) {
                const Degree deg = g - i - 2 * j;
                x.basis.push_back({m, i, j, deg});
                x.graded.add(deg, 1);
            }
        }
    }
    return x;
}

/// Betti numbers of Sym^d(Sigma_g) from the generating function
///   sum_d P_t(Sym^d Sigma_g) q^d = (1 + t q)^{2g} / ((1 - q)(1 - t^2 q)),
/// expanded as a truncated power series. Returns the rank placed in degree j,
/// i.e. b_{g-j}(Sym^d Sigma_g).
inline Rank sym_betti(int g, int d, Degree j)
{
    check_genus(g);
    if (d < 0)
        throw BadParams("sym_betti needs d >= 0");
    const int tmax = 2 * d;
    // series[qdeg][tdeg]
    using Series = std::vector<std::vector<Rank>>;
    auto multiply = [&](const Series& a, const Series& b) {
        Series out(d + 1, std::vector<Rank>(tmax + 1, 0));
        for (int qa = 0; qa <= d; ++qa)
            for (int ta = 0; ta <= tmax; ++ta) {
                if (a[qa][ta] == 0)
                    continue;
                for (int qb = 0; qa + qb <= d; ++qb)
                    for (int tb = 0; ta + tb <= tmax; ++tb)
                        out[qa + qb][ta + tb] += a[qa][ta] * b[qb][tb];
            }
        return out;
    };
    Series one_plus_tq(d + 1, std::vector<Rank>(tmax + 1, 0));
    one_plus_tq[0][0] = 1;
    if (d >= 1)
        one_plus_tq[1][1] = 1;
    Series geometric_q(d + 1, std::vector<Rank>(tmax + 1, 0));
    Series geometric_t2q(d + 1, std::vector<Rank>(tmax + 1, 0));
    for (int c = 0; c <= d; ++c) {
        geometric_q[c][0] = 1;
        geometric_t2q[c][2 * c] = 1;
    }
    Series acc(d + 1, std::vector<Rank>(tmax + 1, 0));
    acc[0][0] = 1;
    for (int i = 0; i < 2 * g; ++i)
        acc = multiply(acc, one_plus_tq);
    acc = multiply(acc, geometric_q);
    acc = multiply(acc, geometric_t2q);
    const int betti_index = g - j;
    if (betti_index < 0 || betti_index > tmax)
        return 0;
    return acc[d][betti_index];
}

/// H^*(Sym^d Sigma_g) with H^m placed in degree g - m.
inline GradedGroup sym_cohomology(int g, int d)
{
    GradedGroup out;
    for (int m = 0; m <= 2 * d; ++m)
        out.add(g - m, sym_betti(g, d, g - m));
    return out;
}

/// {"a1^b1": 1, "1": -2, ...}
inline nlohmann::json to_json(const ExtVector& v)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [m, c] : v.terms())
        out[monomial_name(m)] = c;
    return out;
}

} // namespace mtfloer
