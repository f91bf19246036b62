#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "mtfloer/exterior_algebra.hpp"

using namespace mtfloer;

namespace {

ExtVector sym(int g, const std::string& s) { return ExtVector::symbol(g, s); }

ExtVector random_homogeneous(std::mt19937& rng, int g, int degree)
{
    ExtVector v(g);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const Mask full = (Mask{1} << (2 * g)) - 1;
    for (Mask m = 0; m <= full; ++m)
        if (ext_degree(m) == degree && rng() % 3 == 0)
            v.add_term(m, coeff(rng));
    return v;
}

ExtVector random_vector(std::mt19937& rng, int g)
{
    ExtVector v(g);
    for (int deg = 0; deg <= 2 * g; ++deg)
        if (rng() % 2)
            v += random_homogeneous(rng, g, deg);
    return v;
}

} // namespace

TEST_CASE("wedge signs follow the canonical order", "[exterior]")
{
    const int g = 2;
    CHECK(wedge(sym(g, "a1"), sym(g, "a1")).is_zero());
    CHECK(wedge(sym(g, "b1"), sym(g, "a1")) == -1 * wedge(sym(g, "a1"), sym(g, "b1")));
    const ExtVector a1a2b2 = wedge(wedge(sym(g, "a1"), sym(g, "a2")), sym(g, "b2"));
    const ExtVector top = wedge(wedge(sym(g, "a1"), sym(g, "b1")), wedge(sym(g, "a2"), sym(g, "b2")));
    CHECK(wedge(sym(g, "b1"), a1a2b2) == -1 * top);
    CHECK(top.coefficient(0b1111) == 1);
}

TEST_CASE("contraction with gamma", "[exterior]")
{
    const int g = 2;
    CHECK(contract(ExtVector::unit(g)).is_zero());
    CHECK(contract(wedge(sym(g, "a1"), sym(g, "b1"))) == sym(g, "b1"));
    CHECK(contract(wedge(sym(g, "b2"), sym(g, "a1"))) == -1 * sym(g, "b2"));
    CHECK(contract(sym(g, "a1")) == ExtVector::unit(g));
    CHECK(contract(sym(g, "b1")).is_zero());
}

TEST_CASE("genus mismatch is rejected", "[exterior]")
{
    CHECK_THROWS_AS(wedge(sym(2, "a1"), sym(3, "a1")), GenusMismatch);
    CHECK_THROWS_AS(ExtVector::symbol(2, "a3"), BadParams);
}

TEST_CASE("E+/E- splitting", "[exterior]")
{
    CHECK(split_E(0b1111) == EHalf::plus);
    CHECK(split_E(0b1101) == EHalf::minus);
    CHECK(split_E(0b1100) == EHalf::plus);
    for (int g = 2; g <= 4; ++g) {
        int minus = 0;
        const Mask full = (Mask{1} << (2 * g)) - 1;
        for (Mask m = 0; m <= full; ++m)
            minus += split_E(m) == EHalf::minus;
        CHECK(minus == 2 * (1 << (2 * (g - 1))));
    }
}

TEST_CASE("exterior algebra graded groups", "[exterior]")
{
    CHECK(lambda_group(1) == GradedGroup{{-1, 1}, {0, 2}, {1, 1}});
    CHECK(lambda_group(2) == GradedGroup{{-2, 1}, {-1, 4}, {0, 6}, {1, 4}, {2, 1}});
    CHECK(lambda_group(3).total_rank() == 64);
}

TEST_CASE("X(g,d) modules", "[exterior]")
{
    CHECK(build_X(2, 0).graded == GradedGroup{{2, 1}});
    CHECK(build_X(2, 0).basis.size() == 1);
    CHECK(build_X(2, 1).graded == GradedGroup{{2, 1}, {1, 4}, {0, 1}});
    CHECK(build_X(1, -1).graded.is_zero());
    CHECK(build_X(2, 2).graded.total_rank() == 17);
    for (const auto& e : build_X(3, 2).basis)
        CHECK(e.grading == 3 - e.codegree - 2 * e.u_power);
    CHECK_THROWS_AS(build_X(2, -2), BadParams);
}

TEST_CASE("Betti numbers of symmetric products from the generating function", "[exterior]")
{
    CHECK(sym_betti(2, 1, 2) == 1);
    CHECK(sym_betti(2, 1, 1) == 4);
    CHECK(sym_betti(2, 1, 0) == 1);
    for (int g = 1; g <= 4; ++g)
        for (int j = -6; j <= 6; ++j)
            CHECK(sym_betti(g, 0, j) == (j == g ? 1 : 0));
    CHECK(sym_cohomology(2, 2).total_rank() == 17);
    // Sym^2 of a torus is a sphere bundle over the torus.
    CHECK(sym_cohomology(1, 2) == GradedGroup{{1, 1}, {0, 2}, {-1, 2}, {-2, 2}, {-3, 1}});
}

TEST_CASE("X(g,d) agrees with H^*(Sym^d)", "[exterior]")
{
    for (int g = 1; g <= 4; ++g)
        for (int d = 0; d <= g; ++d) {
            INFO("g=" << g << " d=" << d);
            CHECK(build_X(g, d).graded == sym_cohomology(g, d));
            Rank expected_total = 0;
            for (int i = 0; i <= d; ++i)
                expected_total += (d + 1 - i) * binomial(2 * g, i);
            CHECK(build_X(g, d).graded.total_rank() == expected_total);
        }
}

TEST_CASE("contraction laws on random vectors", "[exterior][property]")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int g = 1 + static_cast<int>(rng() % 4);
        const ExtVector x = random_vector(rng, g);
        CHECK(contract(contract(x)).is_zero());
        const int du = static_cast<int>(rng() % (2 * g + 1));
        const ExtVector u = random_homogeneous(rng, g, du);
        const ExtVector v = random_vector(rng, g);
        const int sign = du % 2 == 0 ? 1 : -1;
        CHECK(contract(wedge(u, v)) == wedge(contract(u), v) + sign * wedge(u, contract(v)));
        // graded commutativity
        const int dv = static_cast<int>(rng() % (2 * g + 1));
        const ExtVector w = random_homogeneous(rng, g, dv);
        CHECK(wedge(u, w) == ((du * dv) % 2 == 0 ? 1 : -1) * wedge(w, u));
        CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
    }
}

TEST_CASE("monomial naming", "[exterior][json]")
{
    CHECK(monomial_symbols(0b0111) == std::vector<std::string>{"a1", "b1", "a2"});
    CHECK(monomial_name(0) == "1");
    const auto j = to_json(ExtVector::monomial(2, 0b0011, -2));
    CHECK(j.dump() == R"({"a1^b1":-2})");
}
