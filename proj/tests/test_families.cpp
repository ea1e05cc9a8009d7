#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cind/clawfree.hpp"
#include "cind/exact.hpp"
#include "cind/families.hpp"

using namespace cind;

TEST_CASE("diamond necklace shape") {
    auto [g8, layout8] = diamond_necklace(8);
    CHECK(g8.order() == 32);
    CHECK(is_cubic(g8));
    CHECK(is_claw_free(g8));
    CHECK(layout8.diamonds.size() == 8);

    auto [g2, layout2] = diamond_necklace(2);
    CHECK(g2.order() == 8);
    CHECK(is_cubic(g2));
    CHECK_THROWS_AS(diamond_necklace(1), std::invalid_argument);
}

TEST_CASE("necklace admits the per-diamond triangles") {
    for (int k : {2, 3, 5, 9}) {
        auto [g, layout] = diamond_necklace(k);
        std::vector<int> s;
        for (const auto& dia : layout.diamonds) s.insert(s.end(), {dia.a, dia.c, dia.d});
        auto check = is_two_regular_induced(g, s);
        REQUIRE(check.ok());
        CHECK(check.certificate->size() == 3 * k);
    }
}

TEST_CASE("necklace exact value is 3n/4 on N_2") {
    auto res = max_induced_two_regular(diamond_necklace(2).first);
    CHECK(res.optimal);
    CHECK(res.certificate.size() == 6);
}

TEST_CASE("fixture orders") {
    CHECK(fixture(FixtureName::k4).order() == 4);
    CHECK(fixture(FixtureName::prism).order() == 6);
    CHECK(fixture(FixtureName::fig2_two_towers).order() == 14);
    CHECK(fixture(FixtureName::fig3_three_towers).order() == 24);
    CHECK(fixture(FixtureName::fig5_half_cubic).order() == 12);
    CHECK(fixture(FixtureName::tower).order() == 10);
    CHECK(complete_bipartite(4).order() == 8);
    CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);
}

TEST_CASE("figure fixtures are cubic; claw-free where claimed") {
    for (auto name : {FixtureName::k4, FixtureName::prism, FixtureName::fig2_two_towers,
                      FixtureName::fig3_three_towers, FixtureName::fig5_half_cubic}) {
        Graph g = fixture(name);
        CHECK(is_cubic(g));
    }
    CHECK(is_claw_free(fixture(FixtureName::prism)));
    CHECK(is_claw_free(fixture(FixtureName::fig2_two_towers)));
    CHECK(is_claw_free(fixture(FixtureName::fig3_three_towers)));
}

TEST_CASE("tower fixture exposes its two attachment vertices") {
    Graph t = fixture(FixtureName::tower);
    CHECK(t.degree(0) == 2);
    CHECK(t.degree(1) == 2);
    for (int v = 2; v < 10; ++v) CHECK(t.degree(v) == 3);
    CHECK(is_claw_free(t));
}

TEST_CASE("double tower has one degree-2 vertex") {
    Graph dt = double_tower();
    CHECK(dt.order() == 17);
    CHECK(dt.degree(0) == 2);
    for (int v = 1; v < 17; ++v) CHECK(dt.degree(v) == 3);
    CHECK(is_claw_free(dt));
}

TEST_CASE("tightness graph shape") {
    for (int k = 1; k <= 4; ++k) {
        Graph g = tightness_graph(k);
        CHECK(g.order() == 20 * k + 34);
        CHECK(is_cubic(g));
        CHECK(is_claw_free(g));
        CHECK(connected_components(g).size() == 1);
        auto towers = find_towers(g, triangle_diamond_partition(g));
        CHECK(static_cast<int>(towers.size()) == 2 * k + 4);
    }
    CHECK_THROWS_AS(tightness_graph(0), std::invalid_argument);
}

TEST_CASE("random claw-free cubic generator") {
    SUBCASE("pure diamond runs are necklaces") {
        for (int d : {2, 3, 5}) {
            Graph g = random_clawfree_cubic(0, d, 99);
            CHECK(g.order() == 4 * d);
            auto p = triangle_diamond_partition(g);
            CHECK(p.diamond_count() == d);
            CHECK(p.triangle_count() == 0);
        }
    }
    SUBCASE("two triangles give the prism") {
        Graph g = random_clawfree_cubic(2, 0, 5);
        CHECK(g.order() == 6);
        CHECK(is_cubic(g));
        auto p = triangle_diamond_partition(g);
        CHECK(p.triangle_count() == 2); // two triple-joined triangles: the prism
    }
    SUBCASE("unit counts are reproduced") {
        int cases[][2] = {{4, 0}, {2, 2}, {6, 1}, {4, 3}, {8, 2}};
        for (auto [t, d] : cases) {
            Graph g = random_clawfree_cubic(t, d, 1234 + t + d);
            CHECK(g.order() == 3 * t + 4 * d);
            CHECK(is_cubic(g));
            CHECK(is_claw_free(g));
            auto p = triangle_diamond_partition(g);
            CHECK(p.triangle_count() == t);
            CHECK(p.diamond_count() == d);
        }
    }
    SUBCASE("infeasible parameters are rejected") {
        CHECK_THROWS(random_clawfree_cubic(0, 1, 1));
        CHECK_THROWS(random_clawfree_cubic(1, 0, 1));
        CHECK_THROWS(random_clawfree_cubic(3, 2, 1));
        CHECK_THROWS_AS(random_clawfree_cubic(0, 0, 1), std::invalid_argument);
    }
    SUBCASE("fixed seed reproduces the graph") {
        CHECK(random_clawfree_cubic(6, 2, 77) == random_clawfree_cubic(6, 2, 77));
    }
}
