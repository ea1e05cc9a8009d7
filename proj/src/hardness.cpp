#include "cind/hardness.hpp"

#include <algorithm>
#include <stdexcept>

namespace cind {

ReductionMap reduce_independent_set(const Graph& g) {
    if (!is_cubic(g)) throw std::invalid_argument("reduce_independent_set: source must be cubic");
    int n = g.order();
    auto edges = g.edge_list();

    ReductionMap map;
    map.source = g;
    map.chosen_edge.assign(n, -1);
    // smallest-id incident edge per vertex
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (map.chosen_edge[u] < 0) map.chosen_edge[u] = static_cast<int>(i);
        if (map.chosen_edge[v] < 0) map.chosen_edge[v] = static_cast<int>(i);
    }

    // target ids: 0..n-1 originals, n..2n-1 the partners v', then the paths
    map.partner.assign(n, -1);
    for (int v = 0; v < n; ++v) map.partner[v] = n + v;
    int path_len = 3 * n - 2;
    auto path_vertex = [&](int v, int j) { return 2 * n + v * path_len + j; };

    std::vector<std::pair<int, int>> tedges;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        bool by_u = map.chosen_edge[u] == static_cast<int>(i);
        bool by_v = map.chosen_edge[v] == static_cast<int>(i);
        if (!by_u && !by_v) {
            tedges.emplace_back(u, v);
        } else if (by_u && by_v) { // subdivide twice: u - u' - v' - v
            tedges.emplace_back(u, map.partner[u]);
            tedges.emplace_back(map.partner[u], map.partner[v]);
            tedges.emplace_back(map.partner[v], v);
        } else {
            int w = by_u ? u : v;
            int other = by_u ? v : u;
            tedges.emplace_back(other, map.partner[w]);
            tedges.emplace_back(map.partner[w], w);
        }
    }
    map.cycles.assign(n, {});
    for (int v = 0; v < n; ++v) {
        tedges.emplace_back(v, path_vertex(v, 0));
        for (int j = 0; j + 1 < path_len; ++j)
            tedges.emplace_back(path_vertex(v, j), path_vertex(v, j + 1));
        tedges.emplace_back(path_vertex(v, path_len - 1), map.partner[v]);
        std::vector<int> cyc{v};
        for (int j = 0; j < path_len; ++j) cyc.push_back(path_vertex(v, j));
        cyc.push_back(map.partner[v]);
        map.cycles[v] = std::move(cyc);
    }
    map.target = Graph::from_edges(3 * n * n, tedges);
    return map;
}

TwoRegularCertificate embed_independent_set(const ReductionMap& map, const std::vector<int>& I) {
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = i + 1; j < I.size(); ++j)
            if (map.source.has_edge(I[i], I[j]))
                throw std::invalid_argument("embed_independent_set: set not independent, edge (" +
                                            std::to_string(I[i]) + "," + std::to_string(I[j]) +
                                            ") inside it");
    std::vector<std::vector<int>> cycles;
    std::vector<int> sorted(I);
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= map.source.order())
            throw std::invalid_argument("embed_independent_set: vertex out of range");
        cycles.push_back(map.cycles[v]);
    }
    return make_certificate(std::move(cycles));
}

ExtractResult extract_independent_set(const ReductionMap& map, const TwoRegularCertificate& cert) {
    ExtractResult res;
    std::vector<char> in(map.target.order(), 0);
    for (int v : cert.vertices) in[v] = 1;
    std::vector<int> I;
    size_t covered = 0;
    for (int v = 0; v < map.source.order(); ++v) {
        bool all = true, any = false;
        for (int w : map.cycles[v]) {
            if (in[w]) any = true;
            else all = false;
        }
        if (all) {
            I.push_back(v);
            covered += map.cycles[v].size();
        } else if (any) {
            res.failure = "certificate cuts through C_" + std::to_string(v) +
                          " without containing it";
            return res;
        }
    }
    if (covered != cert.vertices.size()) {
        res.failure = "certificate contains vertices outside every C_v";
        return res;
    }
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = i + 1; j < I.size(); ++j)
            if (map.source.has_edge(I[i], I[j]))
                throw std::logic_error("extract_independent_set: valid certificate decoded to a "
                                       "dependent set");
    res.independent_set = std::move(I);
    return res;
}

} // namespace cind
