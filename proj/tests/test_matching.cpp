#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cind/matching.hpp"
#include "cind/randgen.hpp"

using namespace cind;

namespace {

Multigraph cycle_multigraph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Multigraph(n, e);
}

// exhaustive maximum matching by trying all edge subsets (small m only)
int brute_max_matching(const Multigraph& g) {
    int m = g.size(), best = 0;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        std::vector<char> cov(g.order(), 0);
        bool ok = true;
        int cnt = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!((s >> i) & 1)) continue;
            const MEdge& e = g.edge_at(i);
            if (cov[e.u] || cov[e.v]) ok = false;
            cov[e.u] = cov[e.v] = 1;
            ++cnt;
        }
        if (ok) best = std::max(best, cnt);
    }
    return best;
}

bool contains_edge(const Matching& m, int id) {
    return std::find(m.edge_ids.begin(), m.edge_ids.end(), id) != m.edge_ids.end();
}

} // namespace

TEST_CASE("cycles match as expected") {
    Matching m6 = maximum_matching(cycle_multigraph(6));
    CHECK(m6.size() == 3);
    CHECK(is_perfect_matching(cycle_multigraph(6), m6));
    Matching m5 = maximum_matching(cycle_multigraph(5));
    CHECK(m5.size() == 2);
    CHECK(is_valid_matching(cycle_multigraph(5), m5));
}

TEST_CASE("matching size agrees with exhaustive search") {
    Rng rng(7);
    for (int i = 0; i < 120; ++i) {
        int n = 2 + rng.below(9);
        Multigraph g = random_multigraph(n, rng.below(std::min(14, 2 * n)), rng);
        Matching m = maximum_matching(g);
        CHECK(is_valid_matching(g, m));
        CHECK(m.size() == brute_max_matching(g));
    }
}

TEST_CASE("blossoms: odd structures") {
    // two triangles joined by a path (classic blossom shrink case)
    Multigraph g(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {6, 7}});
    Matching m = maximum_matching(g);
    CHECK(m.size() == 4);
    CHECK(is_perfect_matching(g, m));
}

TEST_CASE("forced perfect matchings") {
    // doubled edge on two vertices: both edges individually forceable
    Multigraph dbl(2, {{0, 1}, {0, 1}});
    auto m0 = perfect_matching_containing(dbl, 0);
    REQUIRE(m0.has_value());
    CHECK(contains_edge(*m0, 0));
    auto m1 = perfect_matching_containing(dbl, 1);
    REQUIRE(m1.has_value());
    CHECK(contains_edge(*m1, 1));
    // avoiding either parallel edge uses the other
    auto a0 = perfect_matching_avoiding(dbl, 0);
    REQUIRE(a0.has_value());
    CHECK(!contains_edge(*a0, 0));

    // K2: the only perfect matching uses the edge
    Multigraph k2(2, {{0, 1}});
    CHECK(perfect_matching_containing(k2, 0).has_value());
    CHECK(!perfect_matching_avoiding(k2, 0).has_value());

    // C4: any edge avoidable via the opposite pair
    Multigraph c4 = cycle_multigraph(4);
    for (const auto& e : c4.edges()) {
        auto m = perfect_matching_avoiding(c4, e.id);
        REQUIRE(m.has_value());
        CHECK(!contains_edge(*m, e.id));
        CHECK(is_perfect_matching(c4, *m));
    }
    CHECK_THROWS_AS(perfect_matching_containing(c4, 99), std::invalid_argument);
}

TEST_CASE("containing/avoiding agree with exhaustive enumeration") {
    Rng rng(55);
    for (int i = 0; i < 80; ++i) {
        int n = 2 * (1 + rng.below(4)); // 2..8, even
        Multigraph g = random_multigraph(n, 1 + rng.below(11), rng);
        for (const auto& e : g.edges()) {
            // enumerate all perfect matchings containing / avoiding e
            int m = g.size();
            bool any_with = false, any_without = false;
            for (std::uint32_t s = 0; s < (1u << m); ++s) {
                std::vector<char> cov(g.order(), 0);
                bool ok = true;
                int cnt = 0;
                for (int j = 0; j < m && ok; ++j) {
                    if (!((s >> j) & 1)) continue;
                    const MEdge& f = g.edge_at(j);
                    if (cov[f.u] || cov[f.v]) ok = false;
                    cov[f.u] = cov[f.v] = 1;
                    ++cnt;
                }
                if (!ok || 2 * cnt != g.order()) continue;
                if ((s >> e.id) & 1) any_with = true;
                else any_without = true;
            }
            auto with = perfect_matching_containing(g, e.id);
            auto without = perfect_matching_avoiding(g, e.id);
            CHECK(with.has_value() == any_with);
            CHECK(without.has_value() == any_without);
            if (with) {
                CHECK(is_perfect_matching(g, *with));
                CHECK(contains_edge(*with, e.id));
            }
            if (without) {
                CHECK(is_perfect_matching(g, *without));
                CHECK(!contains_edge(*without, e.id));
            }
        }
    }
}

TEST_CASE("tutte violator") {
    CHECK(tutte_violator(cycle_multigraph(6)) == std::nullopt);
    auto c5 = tutte_violator(cycle_multigraph(5));
    REQUIRE(c5.has_value());
    CHECK(c5->empty()); // S = {} already violates on an odd graph
    Rng rng(1);
    Multigraph big = random_multigraph(21, 5, rng);
    CHECK_THROWS_AS(tutte_violator(big), std::invalid_argument);
}

TEST_CASE("tutte oracle matches matching perfection") {
    Rng rng(91);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + rng.below(11);
        Multigraph g = random_multigraph(n, rng.below(2 * n + 2), rng);
        bool perfect = is_perfect_matching(g, maximum_matching(g));
        CHECK(perfect == !tutte_violator(g).has_value());
    }
}

TEST_CASE("1-extendability of 2-connected cubic multigraphs") {
    Rng rng(2024);
    for (int i = 0; i < 40; ++i) {
        Multigraph g = random_cubic_multigraph_2connected(4 + 2 * rng.below(7), rng);
        for (const auto& e : g.edges()) {
            auto m = perfect_matching_containing(g, e.id);
            REQUIRE(m.has_value());
            CHECK(is_perfect_matching(g, *m));
            CHECK(contains_edge(*m, e.id));
        }
    }
}

TEST_CASE("diamond gadget substitution") {
    Multigraph dbl(2, {{0, 1}, {0, 1}});
    DiamondGadget gadget = diamond_gadget_substitute(dbl, 0);
    CHECK(gadget.expanded.order() == 6);
    CHECK(gadget.expanded.size() == 8);

    // e1 in M' maps to a matching using the replaced edge
    auto with = perfect_matching_containing(gadget.expanded, gadget.e1);
    REQUIRE(with.has_value());
    CHECK(contains_edge(*with, gadget.e2));
    CHECK(contains_edge(*with, gadget.e3));
    Matching mapped = map_gadget_matching(dbl, gadget, *with);
    CHECK(is_perfect_matching(dbl, mapped));
    CHECK(contains_edge(mapped, 0));

    // avoiding e1 maps to the plain restriction
    auto without = perfect_matching_avoiding(gadget.expanded, gadget.e1);
    REQUIRE(without.has_value());
    Matching mapped2 = map_gadget_matching(dbl, gadget, *without);
    CHECK(is_perfect_matching(dbl, mapped2));
    CHECK(!contains_edge(mapped2, 0));

    // all perfect matchings of the expanded graph map to perfect matchings
    const Multigraph& ge = gadget.expanded;
    for (std::uint32_t s = 0; s < (1u << ge.size()); ++s) {
        std::vector<char> cov(ge.order(), 0);
        bool ok = true;
        Matching cand;
        for (int j = 0; j < ge.size() && ok; ++j) {
            if (!((s >> j) & 1)) continue;
            const MEdge& f = ge.edge_at(j);
            if (cov[f.u] || cov[f.v]) ok = false;
            cov[f.u] = cov[f.v] = 1;
            cand.edge_ids.push_back(f.id);
        }
        if (!ok || 2 * cand.size() != ge.order()) continue;
        CHECK(is_perfect_matching(dbl, map_gadget_matching(dbl, gadget, cand)));
    }

    CHECK_THROWS_AS(diamond_gadget_substitute(cycle_multigraph(4), 0), std::invalid_argument);
}
