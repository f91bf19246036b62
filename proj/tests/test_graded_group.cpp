#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "mtfloer/graded_group.hpp"

using namespace mtfloer;

namespace {

GradedGroup random_free_group(std::mt19937& rng)
{
    std::uniform_int_distribution<int> deg(-4, 4), rank(0, 3), count(0, 4);
    GradedGroup g;
    for (int i = count(rng); i > 0; --i)
        g.add(deg(rng), rank(rng));
    return g;
}

} // namespace

TEST_CASE("direct sum adds ranks and merges torsion", "[graded]")
{
    CHECK(direct_sum(GradedGroup{{0, 1}}, GradedGroup{{0, 2}}) == GradedGroup{{0, 3}});
    CHECK(direct_sum(GradedGroup{{1, 1}}, GradedGroup{{2, 1}}) == GradedGroup{{1, 1}, {2, 1}});

    GradedGroup a, b;
    a.add(0, 0, {2});
    b.add(0, 0, {4});
    const GradedGroup s = direct_sum(a, b);
    CHECK(s.torsion(0) == std::vector<Integer>{2, 4});
    CHECK(s.rank(0) == 0);
}

TEST_CASE("torsion is renormalized to a divisibility chain", "[graded]")
{
    CHECK(normalize_torsion({2, 3}) == std::vector<Integer>{6});
    CHECK(normalize_torsion({4, 6, 9}) == std::vector<Integer>{6, 36});
    CHECK(normalize_torsion({1, 5}) == std::vector<Integer>{5});
}

TEST_CASE("zero entries are never stored", "[graded]")
{
    GradedGroup g;
    g.add(3, 0);
    CHECK(g.is_zero());
    CHECK(g.entries().empty());
}

TEST_CASE("tensor of free groups is the Cauchy product", "[graded]")
{
    const GradedGroup circles2{{0, 2}, {1, 2}};
    CHECK(tensor(GradedGroup{{0, 1}}, circles2) == circles2);
    CHECK(tensor(GradedGroup{{2, 1}}, circles2) == GradedGroup{{2, 2}, {3, 2}});
    const GradedGroup s1{{0, 1}, {1, 1}};
    CHECK(tensor(s1, s1) == GradedGroup{{0, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("tensor rejects torsion", "[graded]")
{
    GradedGroup t;
    t.add(0, 1, {2});
    CHECK_THROWS_AS(tensor(t, GradedGroup{{0, 1}}), TorsionUnsupported);
    CHECK_THROWS_AS(tensor(GradedGroup{{0, 1}}, t), TorsionUnsupported);
}

TEST_CASE("shifts and comparison up to shift", "[graded]")
{
    CHECK(shift(GradedGroup{{0, 1}}, -1) == GradedGroup{{-1, 1}});
    const GradedGroup x{{0, 3}, {4, 1}};
    CHECK(shift(x, 0) == x);
    CHECK(shift(circles_cohomology(5), -1) == GradedGroup{{-1, 5}, {0, 5}});

    auto r = equal_up_to_shift(GradedGroup{{0, 1}}, GradedGroup{{2, 1}});
    CHECK(r.equal);
    CHECK(r.shift == 2);
    CHECK_FALSE(equal_up_to_shift(GradedGroup{{0, 1}, {1, 2}}, GradedGroup{{0, 2}, {1, 1}}).equal);
    auto z = equal_up_to_shift(GradedGroup{}, GradedGroup{});
    CHECK(z.equal);
    CHECK(z.shift == 0);
    CHECK_FALSE(equal_up_to_shift(GradedGroup{}, GradedGroup{{0, 1}}).equal);
}

TEST_CASE("circle and odd sphere groups", "[graded]")
{
    CHECK(circles_cohomology(1) == GradedGroup{{0, 1}, {1, 1}});
    CHECK(circles_cohomology(2) == GradedGroup{{0, 2}, {1, 2}});
    CHECK(circles_cohomology(0).is_zero());
    CHECK(odd_spheres_homology(1, 1) == GradedGroup{{0, 1}, {1, 1}});
    CHECK(odd_spheres_homology(2, 2) == GradedGroup{{0, 2}, {3, 2}});
    CHECK(odd_spheres_homology(0, 3).is_zero());
    CHECK_THROWS_AS(circles_cohomology(-1), BadParams);
    CHECK_THROWS_AS(odd_spheres_homology(1, 0), BadParams);
}

TEST_CASE("graded group algebra laws on random free groups", "[graded][property]")
{
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 300; ++trial) {
        const GradedGroup a = random_free_group(rng);
        const GradedGroup b = random_free_group(rng);
        const GradedGroup c = random_free_group(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(tensor(a, b) == tensor(b, a));
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        CHECK(tensor(a, b + c) == tensor(a, b) + tensor(a, c));
        CHECK((a + b).total_rank() == a.total_rank() + b.total_rank());
        CHECK(tensor(a, b).total_rank() == a.total_rank() * b.total_rank());
        if (!a.is_zero()) {
            const int s = static_cast<int>(rng() % 11) - 5;
            const auto r = equal_up_to_shift(a, shift(a, s));
            CHECK(r.equal);
            CHECK(r.shift == s);
        }
    }
}

TEST_CASE("canonical JSON form", "[graded][json]")
{
    GradedGroup g{{1, 2}, {-1, 1}};
    g.add(0, 0, {3});
    const auto j = to_json(g);
    CHECK(j.dump() == R"({"degrees":[{"degree":-1,"rank":1,"torsion":[]},{"degree":0,"rank":0,"torsion":[3]},{"degree":1,"rank":2,"torsion":[]}]})");
    CHECK(graded_group_from_json(j) == g);
}

TEST_CASE("euler characteristic of a graded group", "[graded]")
{
    CHECK(euler_characteristic(GradedGroup{{2, 1}, {1, 4}, {0, 1}}) == -2);
    CHECK(euler_characteristic(GradedGroup{{-1, 3}}) == -3);
}
