#include "cind/families.hpp"

#include <stdexcept>

#include "cind/randgen.hpp"

namespace cind {

namespace {

// tower block at vertex offset o: base {o,o+1,o+2} (0,1 attach, 2 apex),
// middle {o+3,o+4,o+5}, diamond {o+6..o+9} with a=o+6, b=o+7
void add_tower_edges(std::vector<std::pair<int, int>>& e, int o) {
    e.insert(e.end(), {{o + 0, o + 1}, {o + 0, o + 2}, {o + 1, o + 2},
                       {o + 2, o + 3},
                       {o + 3, o + 4}, {o + 3, o + 5}, {o + 4, o + 5},
                       {o + 4, o + 6}, {o + 5, o + 7},
                       {o + 6, o + 8}, {o + 6, o + 9}, {o + 7, o + 8}, {o + 7, o + 9},
                       {o + 8, o + 9}});
}

// double tower at offset o: base {o,o+1,o+2} with o exposed (degree 2),
// two middle triangles and two diamonds stacked on o+1 and o+2
void add_double_tower_edges(std::vector<std::pair<int, int>>& e, int o) {
    e.insert(e.end(), {{o + 0, o + 1}, {o + 0, o + 2}, {o + 1, o + 2}});
    // arm on o+1: middle {o+3,o+4,o+5}, diamond {o+9..o+12}
    e.insert(e.end(), {{o + 1, o + 3},
                       {o + 3, o + 4}, {o + 3, o + 5}, {o + 4, o + 5},
                       {o + 4, o + 9}, {o + 5, o + 10},
                       {o + 9, o + 11}, {o + 9, o + 12}, {o + 10, o + 11}, {o + 10, o + 12},
                       {o + 11, o + 12}});
    // arm on o+2: middle {o+6,o+7,o+8}, diamond {o+13..o+16}
    e.insert(e.end(), {{o + 2, o + 6},
                       {o + 6, o + 7}, {o + 6, o + 8}, {o + 7, o + 8},
                       {o + 7, o + 13}, {o + 8, o + 14},
                       {o + 13, o + 15}, {o + 13, o + 16}, {o + 14, o + 15}, {o + 14, o + 16},
                       {o + 15, o + 16}});
}

} // namespace

std::pair<Graph, NecklaceLayout> diamond_necklace(int k) {
    if (k < 2) throw std::invalid_argument("diamond_necklace: k >= 2 required");
    NecklaceLayout layout;
    layout.k = k;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        int a = 4 * i, b = 4 * i + 1, c = 4 * i + 2, d = 4 * i + 3;
        layout.diamonds.push_back({a, b, c, d});
        edges.insert(edges.end(), {{a, c}, {a, d}, {b, c}, {b, d}, {c, d}});
    }
    for (int i = 0; i < k; ++i)
        edges.emplace_back(layout.diamonds[i].a, layout.diamonds[(i + 1) % k].b);
    return {Graph::from_edges(4 * k, edges), layout};
}

Graph double_tower() {
    std::vector<std::pair<int, int>> edges;
    add_double_tower_edges(edges, 0);
    return Graph::from_edges(17, edges);
}

Graph tightness_graph(int k) {
    if (k < 1) throw std::invalid_argument("tightness_graph: k >= 1 required");
    std::vector<std::pair<int, int>> edges;
    add_double_tower_edges(edges, 0); // v1 = 0
    for (int i = 0; i < 2 * k; ++i) add_tower_edges(edges, 17 + 10 * i);
    int v2_off = 17 + 20 * k;
    add_double_tower_edges(edges, v2_off); // v2 = v2_off
    // path: v1 - tw0 - tw1 - ... - tw(2k-1) - v2, hooked at base vertices 0/1
    edges.emplace_back(0, 17 + 0);
    for (int i = 0; i + 1 < 2 * k; ++i)
        edges.emplace_back(17 + 10 * i + 1, 17 + 10 * (i + 1) + 0);
    edges.emplace_back(17 + 10 * (2 * k - 1) + 1, v2_off);
    return Graph::from_edges(20 * k + 34, edges);
}

Graph complete_bipartite(int k) {
    if (k < 1) throw std::invalid_argument("complete_bipartite: k >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v) edges.emplace_back(u, k + v);
    return Graph::from_edges(2 * k, edges);
}

Graph fixture(FixtureName name) {
    switch (name) {
    case FixtureName::k4:
        return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case FixtureName::prism:
        return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                                     {0, 3}, {1, 4}, {2, 5}});
    case FixtureName::fig2_two_towers:
        // diamond {0,1,2,3} - triangle {4,5,6} - triangle {7,8,9} - diamond {10,11,12,13}
        return Graph::from_edges(
            14, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                 {0, 4}, {1, 5},
                 {4, 5}, {4, 6}, {5, 6},
                 {6, 7},
                 {7, 8}, {7, 9}, {8, 9},
                 {8, 10}, {9, 11},
                 {10, 12}, {10, 13}, {11, 12}, {11, 13}, {12, 13}});
    case FixtureName::fig3_three_towers: {
        std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {1, 2}};
        for (int i = 0; i < 3; ++i) {
            int m = 3 + 7 * i;     // middle triangle {m, m+1, m+2}
            int dd = 6 + 7 * i;    // diamond {dd, dd+1, dd+2, dd+3}
            e.emplace_back(i, m);
            e.insert(e.end(), {{m, m + 1}, {m, m + 2}, {m + 1, m + 2}});
            e.insert(e.end(), {{m + 1, dd}, {m + 2, dd + 1}});
            e.insert(e.end(), {{dd, dd + 2}, {dd, dd + 3}, {dd + 1, dd + 2}, {dd + 1, dd + 3},
                               {dd + 2, dd + 3}});
        }
        return Graph::from_edges(24, e);
    }
    case FixtureName::fig5_half_cubic:
        return Graph::from_edges(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                      {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 6},
                                      {6, 1}, {7, 0}, {2, 9}, {3, 8}, {5, 10}, {4, 11}});
    case FixtureName::tower: {
        std::vector<std::pair<int, int>> e;
        add_tower_edges(e, 0);
        return Graph::from_edges(10, e);
    }
    }
    throw std::invalid_argument("fixture: unknown name");
}

Graph fixture(const std::string& name) {
    if (name == "k4") return fixture(FixtureName::k4);
    if (name == "prism") return fixture(FixtureName::prism);
    if (name == "fig2_two_towers" || name == "fig2") return fixture(FixtureName::fig2_two_towers);
    if (name == "fig3_three_towers" || name == "fig3") return fixture(FixtureName::fig3_three_towers);
    if (name == "fig5_half_cubic" || name == "fig5") return fixture(FixtureName::fig5_half_cubic);
    if (name == "tower") return fixture(FixtureName::tower);
    throw std::invalid_argument("fixture: unknown name \"" + name + "\"");
}

Graph random_clawfree_cubic(int t, int d, std::uint64_t seed) {
    if (t < 0 || d < 0 || t + d == 0)
        throw std::invalid_argument("random_clawfree_cubic: need t, d >= 0 and t + d > 0");
    if ((3 * t + 2 * d) % 2 != 0)
        throw std::runtime_error("random_clawfree_cubic: odd stub count, no pairing exists");
    if (t == 0 && d < 2)
        throw std::runtime_error("random_clawfree_cubic: all-diamond graphs need d >= 2");

    int n = 3 * t + 4 * d;
    // stub -> (vertex, unit)
    std::vector<std::pair<int, int>> stubs;
    std::vector<std::pair<int, int>> unit_edges;
    for (int i = 0; i < t; ++i) {
        int base = 3 * i;
        unit_edges.insert(unit_edges.end(),
                          {{base, base + 1}, {base, base + 2}, {base + 1, base + 2}});
        for (int s = 0; s < 3; ++s) stubs.emplace_back(base + s, i);
    }
    for (int j = 0; j < d; ++j) {
        int base = 3 * t + 4 * j;
        int a = base, b = base + 1, c = base + 2, dd = base + 3;
        unit_edges.insert(unit_edges.end(), {{a, c}, {a, dd}, {b, c}, {b, dd}, {c, dd}});
        stubs.emplace_back(a, t + j);
        stubs.emplace_back(b, t + j);
    }

    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> order = stubs;
        rng.shuffle(order);
        bool ok = true;
        std::vector<std::pair<int, int>> edges = unit_edges;
        for (size_t i = 0; i + 1 < order.size(); i += 2) {
            if (order[i].second == order[i + 1].second) { // stub pair inside one unit
                ok = false;
                break;
            }
            edges.emplace_back(order[i].first, order[i + 1].first);
        }
        if (!ok) continue;
        Graph g = Graph::from_edges(n, edges);
        if (connected_components(g).size() != 1) continue;
        if (!is_cubic(g) || !is_claw_free(g))
            throw std::logic_error("random_clawfree_cubic: generator invariant broken");
        return g;
    }
    throw std::runtime_error("random_clawfree_cubic: no feasible pairing found for (t=" +
                             std::to_string(t) + ", d=" + std::to_string(d) + ")");
}

} // namespace cind
