#pragma once

// Closed-form evaluators: HF+ of the separating-twist mapping tori, the genus g-2
// corollary and its surface-cohomology counterparts, the d1 homology of X(g, d),
// and the degree shift of the surgery cobordism maps.

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exterior_algebra.hpp"
#include "graded_group.hpp"
#include "integer.hpp"

namespace mtfloer {

struct ClosedFormParams {
    int g = 0;
    int n = 0;
    int k = 0;

    int abs_k() const { return std::abs(k); }
    int d() const { return g - 1 - abs_k(); }
    int eps() const { return n > 0 ? 0 : -1; }

    /// |k| >= g: zero by the adjunction inequality.
    bool vanishes_by_adjunction() const { return abs_k() > g - 1; }

    static ClosedFormParams make(int g, int n, int k)
    {
        if (g < 2)
            throw BadGenus("genus must be at least 2, got " + std::to_string(g));
        if (n == 0)
            throw ZeroTwist("twist power n must be nonzero");
        if (k == 0)
            throw BadParams("k = 0 (torsion spin-c structure) is not covered");
        return {g, n, k};
    }
};

inline GradedGroup theorem_answer(const ClosedFormParams& p)
{
    if (p.vanishes_by_adjunction())
        return {};
    const int g = p.g;
    const int d = p.d();
    const int eps = p.eps();
    GradedGroup out = shift(tensor(build_X(g - 1, d - 1).graded, circles_cohomology(2)), eps)
                      + lambda_piece(g - 1, 2 * g - 2 - d, g - d);
    for (int q = 1; q <= d; ++q) {
        const GradedGroup lam = shift(lambda_piece(g - 1, 2 * g - 2 - d + q, g - d - q + 1), eps);
        out = out + tensor(lam, odd_spheres_homology(std::abs(p.n) - 1, q));
    }
    return out;
}

inline GradedGroup theorem_answer(int g, int n, int k) { return theorem_answer(ClosedFormParams::make(g, n, k)); }

/// H^*(Sigma_g \ C), C = |n| parallel copies of the separating circle: a punctured
/// torus, a punctured genus-(g-1) surface and |n|-1 annuli.
inline GradedGroup surface_complement_cohomology(int g, int n)
{
    if (g < 2 || n < 1)
        throw BadParams("surface_complement_cohomology needs g >= 2 and n >= 1");
    const GradedGroup punctured_torus{{0, 1}, {1, 2}};
    const GradedGroup punctured_rest{{0, 1}, {1, 2 * (g - 1)}};
    const GradedGroup annuli = circles_cohomology(n - 1);
    return punctured_torus + punctured_rest + annuli;
}

/// H^*(Sigma_g, C) via Lefschetz duality H^q(Sigma_g, C) = H_{2-q}(Sigma_g \ C).
inline GradedGroup surface_rel_cohomology(int g, int n)
{
    const GradedGroup complement = surface_complement_cohomology(g, n);
    GradedGroup out;
    for (const auto& [deg, e] : complement.entries())
        out.add(2 - deg, e.rank);
    return out;
}

/// HF+ in the s_{g-2} structure: Z^{n+1}_(g) + Z^{2g+n-1}_(g-1) for n > 0; for n < 0
/// the same ranks with |n| sit one degree lower.
inline GradedGroup corollary_answer(int g, int n)
{
    if (g < 3)
        throw BadGenus("corollary needs g >= 3 so that k = g-2 >= 1");
    if (n == 0)
        throw ZeroTwist("twist power n must be nonzero");
    const int m = std::abs(n);
    if (n > 0)
        return GradedGroup{{g, m + 1}, {g - 1, 2 * g + m - 1}};
    // n < 0: H^*(Sigma \ C) moved up by g-2, so the big rank sits on top
    return GradedGroup{{g - 1, 2 * g + m - 1}, {g - 2, m + 1}};
}

/// H_*(X(g,d), d1) = X(g-1,d-1) (x) H^*(S^1) + Lambda^{2g-2-d} H^1(Sigma_{g-1})_(g-d).
/// With left_handed the circle factor is H^*(S^1)[-1].
inline GradedGroup hX_formula(int g, int d, bool left_handed = false)
{
    if (g < 2 || d < 0 || d > g - 1)
        throw BadParams("hX_formula needs g >= 2 and 0 <= d <= g-1");
    return tensor(build_X(g - 1, d - 1).graded, circles_cohomology(1, left_handed ? -1 : 0))
           + lambda_piece(g - 1, 2 * g - 2 - d, g - d);
}

/// deg F_r = -n x^2 - (n - 2k) x + (n - (n - 2k)^2) / (4n)
inline Rational degree_shift(int n, int k, int x)
{
    if (n < 1 || k < 1 || k > n - 1)
        throw BadParams("degree_shift needs n >= 1 and 1 <= k <= n-1");
    const Rational nn = n;
    const Rational m = n - 2 * k;
    const Rational xx = x;
    return -nn * xx * xx - m * xx + (nn - m * m) / (4 * nn);
}

/// Integer maximizing degree_shift(n, k, .): the integer nearest the vertex -1/2 + k/n.
inline int degree_shift_argmax(int n, int k)
{
    if (n < 1 || k < 1 || k > n - 1)
        throw BadParams("degree_shift needs n >= 1 and 1 <= k <= n-1");
    const Rational vertex = Rational(-1, 2) + Rational(k, n);
    const Integer fl = boost::multiprecision::numerator(vertex) / boost::multiprecision::denominator(vertex)
                       - (vertex < 0 && boost::multiprecision::denominator(vertex) != 1 ? 1 : 0);
    const int lo = static_cast<int>(fl);
    return degree_shift(n, k, lo + 1) > degree_shift(n, k, lo) ? lo + 1 : lo;
}

} // namespace mtfloer
