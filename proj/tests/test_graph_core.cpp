#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cind/blocks.hpp"
#include "cind/cycles.hpp"
#include "cind/families.hpp"
#include "cind/graph_io.hpp"
#include "cind/randgen.hpp"

using namespace cind;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

} // namespace

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.size() == 2);
}

TEST_CASE("graph6 fixtures") {
    Graph k4 = fixture(FixtureName::k4);
    CHECK(emit_graph6(k4) == "C~");
    CHECK(parse_graph6("C~") == k4);
    CHECK(parse_graph6("A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(emit_graph6(Graph::from_edges(1, {})) == "@");
    CHECK(parse_graph6(">>graph6<<C~") == k4);
    CHECK(parse_graph6("C~\n") == k4);
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~x"), ParseError); // trailing garbage
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);   // truncated
    CHECK_THROWS_AS(parse_graph6(std::string("C") + char(20)), ParseError);
    try {
        parse_graph6("C~~");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("graph6 round-trip on random graphs") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(1 + rng.below(20), 10 + rng.below(80), 100, rng);
        std::string s = emit_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("graph6 extended order form") {
    Rng rng(11);
    Graph g = random_graph(70, 10, 100, rng);
    std::string s = emit_graph6(g);
    CHECK(s.size() >= 4);
    CHECK(s[0] == 126);
    CHECK(parse_graph6(s) == g);
}

TEST_CASE("edge list format") {
    Graph tri = parse_edgelist("3 3\n0 1\n1 2\n0 2\n");
    CHECK(tri == cycle_graph(3));
    CHECK_THROWS_AS(parse_edgelist("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("2 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("2 2\n0 1\n"), ParseError);
    try {
        parse_edgelist("3 2\n0 1\n1 1\n");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(2 + rng.below(12), 40, 100, rng);
        CHECK(parse_edgelist(emit_edgelist(g)) == g);
    }
}

TEST_CASE("two-regular certificate checks") {
    Graph c5 = cycle_graph(5);
    auto all = std::vector<int>{0, 1, 2, 3, 4};
    auto res = is_two_regular_induced(c5, all);
    REQUIRE(res.ok());
    CHECK(res.certificate->cycles.size() == 1);
    CHECK(res.certificate->cycles[0] == std::vector<int>{0, 1, 2, 3, 4});

    Graph k4 = fixture(FixtureName::k4);
    auto tri = is_two_regular_induced(k4, std::vector<int>{0, 1, 3});
    REQUIRE(tri.ok());
    CHECK(tri.certificate->cycles[0].size() == 3);

    auto bad = is_two_regular_induced(k4, std::vector<int>{0, 1, 2, 3});
    CHECK(!bad.ok());
    CHECK(bad.offending_degree == 3);

    auto empty = is_two_regular_induced(k4, std::vector<int>{});
    REQUIRE(empty.ok());
    CHECK(empty.certificate->size() == 0);
}

TEST_CASE("certificate matches direct degree count on random sets") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(3 + rng.below(10), 30 + rng.below(40), 100, rng);
        std::vector<int> s;
        for (int v = 0; v < g.order(); ++v)
            if (rng.chance(1, 2)) s.push_back(v);
        auto res = is_two_regular_induced(g, s);
        bool expect = true;
        for (int v : s) {
            int d = 0;
            for (int w : s)
                if (w != v && g.has_edge(v, w)) ++d;
            if (d != 2) expect = false;
        }
        CHECK(res.ok() == expect);
    }
}

TEST_CASE("claw detection") {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    auto claw = find_claw(star);
    REQUIRE(claw.has_value());
    CHECK(claw->center == 0);
    CHECK(claw->leaves == std::array<int, 3>{1, 2, 3});

    CHECK(is_claw_free(diamond_necklace(4).first));
    CHECK(!is_claw_free(complete_bipartite(4)));
    CHECK(is_claw_free(fixture(FixtureName::tower)));
}

TEST_CASE("degree and component helpers") {
    Graph k4 = fixture(FixtureName::k4);
    CHECK(is_cubic(k4));
    CHECK(max_degree(k4) == 3);
    Graph p3 = path_graph(3);
    CHECK(!is_cubic(p3));
    CHECK(max_degree(p3) == 2);

    Graph two_tri = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = connected_components(two_tri);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});
}

TEST_CASE("biconnected decomposition") {
    // path on 4 vertices: 3 trivial blocks, 2 cut vertices, 3 bridges
    Multigraph p4 = to_multigraph(path_graph(4));
    auto dec = biconnected_decomposition(p4);
    CHECK(dec.blocks.size() == 3);
    CHECK(dec.cut_vertices == std::vector<int>{1, 2});
    CHECK(dec.bridges.size() == 3);

    Multigraph c5 = to_multigraph(cycle_graph(5));
    auto dec5 = biconnected_decomposition(c5);
    CHECK(dec5.blocks.size() == 1);
    CHECK(dec5.bridges.empty());
    CHECK(block_is_cycle(c5, dec5.blocks[0]));

    // two triangles sharing a vertex
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto decb = biconnected_decomposition(to_multigraph(bowtie));
    CHECK(decb.blocks.size() == 2);
    CHECK(decb.cut_vertices == std::vector<int>{2});
    CHECK(decb.bridges.empty());

    // a parallel pair is a 2-cycle block, not a bridge
    Multigraph par(2, {{0, 1}, {0, 1}});
    auto decp = biconnected_decomposition(par);
    CHECK(decp.blocks.size() == 1);
    CHECK(decp.blocks[0].size() == 2);
    CHECK(decp.bridges.empty());
    CHECK(block_is_cycle(par, decp.blocks[0]));
}

TEST_CASE("block edge sets partition the edges") {
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        Multigraph g = random_multigraph(2 + rng.below(10), rng.below(18), rng);
        auto dec = biconnected_decomposition(g);
        std::vector<int> seen;
        for (const auto& blk : dec.blocks) seen.insert(seen.end(), blk.begin(), blk.end());
        std::sort(seen.begin(), seen.end());
        CHECK(static_cast<int>(seen.size()) == g.size());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("contracting blocks yields a forest") {
    // block-cut incidence graph: nodes are blocks plus cut vertices; a block
    // is tied to each cut vertex it touches; the result is acyclic
    Rng rng(29);
    for (int i = 0; i < 60; ++i) {
        Multigraph g = random_multigraph(2 + rng.below(11), rng.below(20), rng);
        auto dec = biconnected_decomposition(g);
        std::vector<char> is_cut(g.order(), 0);
        for (int v : dec.cut_vertices) is_cut[v] = 1;
        int nodes = static_cast<int>(dec.blocks.size() + dec.cut_vertices.size());
        int edges = 0;
        for (const auto& blk : dec.blocks)
            for (int v : BlockDecomposition::block_vertices(g, blk)) edges += is_cut[v];
        // forest: edges <= nodes - components; count incidence components
        // conservatively as the number of connected components of g that
        // contain at least one edge
        int comps = 0;
        std::vector<int> comp_of(g.order(), -1);
        for (int v = 0; v < g.order(); ++v) {
            if (comp_of[v] >= 0 || g.degree(v) == 0) continue;
            ++comps;
            std::vector<int> stack{v};
            comp_of[v] = comps;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int idx : g.incident(u)) {
                    const MEdge& e = g.edge_at(idx);
                    int w = e.u == u ? e.v : e.u;
                    if (comp_of[w] < 0) {
                        comp_of[w] = comps;
                        stack.push_back(w);
                    }
                }
            }
        }
        CHECK(edges == nodes - comps);
    }
}

TEST_CASE("shortest cycle") {
    CHECK(!shortest_cycle(path_graph(6)).has_value());
    auto k4cyc = shortest_cycle(fixture(FixtureName::k4));
    REQUIRE(k4cyc.has_value());
    CHECK(k4cyc->size() == 3);
    CHECK(*k4cyc == std::vector<int>{0, 1, 2});

    // C6 plus one chord: girth 4, lexicographically smallest from vertex 0
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    auto cyc = shortest_cycle(g);
    REQUIRE(cyc.has_value());
    CHECK(*cyc == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("shortest cycle output is chordless") {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(4 + rng.below(12), 20 + rng.below(50), 100, rng);
        auto cyc = shortest_cycle(g);
        if (!cyc) continue;
        size_t len = cyc->size();
        for (size_t a = 0; a < len; ++a)
            for (size_t b = a + 2; b < len; ++b) {
                if (a == 0 && b == len - 1) continue;
                CHECK(!g.has_edge((*cyc)[a], (*cyc)[b]));
            }
    }
}

TEST_CASE("multigraph vertex deletion keeps edge ids") {
    Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    std::vector<int> old_of_new;
    Multigraph h = g.remove_vertices(std::vector<int>{0}, &old_of_new);
    CHECK(h.order() == 3);
    CHECK(old_of_new == std::vector<int>{1, 2, 3});
    CHECK(h.find_edge(0) == nullptr);
    CHECK(h.find_edge(1) != nullptr);
    CHECK(h.find_edge(4) != nullptr);
}
