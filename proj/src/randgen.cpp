#include "cind/randgen.hpp"

#include <algorithm>
#include <stdexcept>

#include "cind/blocks.hpp"

namespace cind {

Graph random_graph(int n, int prob_num, int prob_den, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(prob_num, prob_den)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_cubic_graph(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("random_cubic_graph: need even n >= 4");
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            std::pair<int, int> p = std::minmax(u, v);
            edges.emplace_back(p.first, p.second);
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph::from_edges(n, edges);
    }
    throw std::runtime_error("random_cubic_graph: rejection sampling failed");
}

Multigraph random_multigraph(int n, int m, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random_multigraph: need n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int u = rng.below(n);
        int v = rng.below(n - 1);
        if (v >= u) ++v; // uniform over v != u
        edges.emplace_back(u, v);
    }
    return Multigraph(n, edges);
}

Multigraph random_cubic_multigraph_2connected(int n, Rng& rng) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("random_cubic_multigraph_2connected: need even n >= 2");
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                ok = false;
                break;
            }
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        if (!ok) continue;
        Multigraph g(n, edges);
        if (!g.is_connected()) continue;
        auto dec = biconnected_decomposition(g);
        if (!dec.cut_vertices.empty() || dec.blocks.size() != 1) continue;
        return g;
    }
    throw std::runtime_error("random_cubic_multigraph_2connected: rejection sampling failed");
}

} // namespace cind
