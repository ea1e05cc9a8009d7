#include "cind/blocks.hpp"

#include <algorithm>
#include <map>

namespace cind {

namespace {

struct Tarjan {
    const Multigraph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<int> edge_stack; // edge indices
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit Tarjan(const Multigraph& mg)
        : g(mg), disc(mg.order(), -1), low(mg.order(), 0), is_cut(mg.order(), 0) {}

    // iterative DFS; `via` is the edge index used to enter the vertex
    void run(int root) {
        struct Frame {
            int v;
            int via;
            size_t it;
        };
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.it < inc.size()) {
                int ei = inc[f.it++];
                if (ei == f.via) continue;
                const MEdge& e = g.edge_at(ei);
                int w = e.u == f.v ? e.v : e.u;
                if (disc[w] < 0) {
                    edge_stack.push_back(ei);
                    disc[w] = low[w] = timer++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, ei, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(ei);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, via = f.via;
                stack.pop_back();
                if (stack.empty()) break;
                int parent = stack.back().v;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) {
                    if (parent != root) is_cut[parent] = 1;
                    std::vector<int> block;
                    while (true) {
                        int ei = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(g.edge_at(ei).id);
                        if (ei == via) break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

} // namespace

BlockDecomposition biconnected_decomposition(const Multigraph& g) {
    Tarjan t(g);
    for (int v = 0; v < g.order(); ++v)
        if (t.disc[v] < 0 && g.degree(v) > 0) t.run(v);

    BlockDecomposition out;
    out.blocks = std::move(t.blocks);
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int v = 0; v < g.order(); ++v)
        if (t.is_cut[v]) out.cut_vertices.push_back(v);
    // a parallel pair is a 2-edge cycle block, so single-edge blocks are
    // exactly the bridges
    for (const auto& b : out.blocks)
        if (b.size() == 1) out.bridges.push_back(b.front());
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

std::vector<int> BlockDecomposition::block_vertices(const Multigraph& g,
                                                    const std::vector<int>& block_edges) {
    std::vector<int> verts;
    for (int id : block_edges) {
        const MEdge* e = g.find_edge(id);
        verts.push_back(e->u);
        verts.push_back(e->v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

bool block_is_cycle(const Multigraph& g, const std::vector<int>& block_edges) {
    if (block_edges.size() < 2) return false;
    std::map<int, int> deg;
    for (int id : block_edges) {
        const MEdge* e = g.find_edge(id);
        deg[e->u]++;
        deg[e->v]++;
    }
    for (auto [v, d] : deg)
        if (d != 2) return false;
    return true;
}

} // namespace cind
