#include "cind/matching.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <stdexcept>

namespace cind {

namespace {

// Edmonds' blossom algorithm on the simple-graph view of a multigraph.
// Standard O(V^3) formulation with base[] contraction markers.
struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, blossom;

    explicit Blossom(int n) : n(n), adj(n), match(n, -1), parent(n), base(n), used(n), blossom(n) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        // augment along the alternating path ending at `to`
                        int u = to;
                        while (u != -1) {
                            int pv = parent[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }

    void solve() {
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) find_path(v);
    }
};

} // namespace

bool is_valid_matching(const Multigraph& g, const Matching& m) {
    std::vector<char> covered(g.order(), 0);
    for (int id : m.edge_ids) {
        const MEdge* e = g.find_edge(id);
        if (!e) return false;
        if (covered[e->u] || covered[e->v]) return false;
        covered[e->u] = covered[e->v] = 1;
    }
    return true;
}

bool is_perfect_matching(const Multigraph& g, const Matching& m) {
    return is_valid_matching(g, m) && 2 * m.size() == g.order();
}

Matching maximum_matching(const Multigraph& g) {
    int n = g.order();
    Blossom bl(n);
    // canonical representative (smallest edge id) per vertex pair
    std::map<std::pair<int, int>, int> rep;
    for (const auto& e : g.edges()) {
        std::pair<int, int> key = std::minmax(e.u, e.v);
        auto it = rep.find({key.first, key.second});
        if (it == rep.end() || e.id < it->second) rep[{key.first, key.second}] = e.id;
    }
    for (const auto& [key, id] : rep) {
        bl.adj[key.first].push_back(key.second);
        bl.adj[key.second].push_back(key.first);
    }
    for (int v = 0; v < n; ++v) std::sort(bl.adj[v].begin(), bl.adj[v].end());
    bl.solve();
    // certify maximality: one more phase from every exposed vertex must fail
    for (int v = 0; v < n; ++v)
        if (bl.match[v] == -1 && bl.find_path(v))
            throw std::logic_error("maximum_matching: phase left an augmenting path");
    Matching m;
    for (int v = 0; v < n; ++v)
        if (bl.match[v] > v) {
            auto it = rep.find({v, bl.match[v]});
            m.edge_ids.push_back(it->second);
        }
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return m;
}

std::optional<Matching> perfect_matching_containing(const Multigraph& g, int edge_id) {
    const MEdge* e = g.find_edge(edge_id);
    if (!e) throw std::invalid_argument("perfect_matching_containing: unknown edge id");
    std::array<int, 2> both{e->u, e->v};
    Multigraph rest = g.remove_vertices(both);
    Matching m = maximum_matching(rest);
    if (2 * m.size() != rest.order()) return std::nullopt;
    m.edge_ids.push_back(edge_id);
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return m;
}

std::optional<Matching> perfect_matching_avoiding(const Multigraph& g, int edge_id) {
    const MEdge* e = g.find_edge(edge_id);
    if (!e) throw std::invalid_argument("perfect_matching_avoiding: unknown edge id");
    // force an adjacent edge into the matching instead
    for (int ei : g.incident(e->u)) {
        const MEdge& f = g.edge_at(ei);
        if (f.id == edge_id) continue;
        if (auto m = perfect_matching_containing(g, f.id)) return m;
    }
    // the endpoint u must be covered somehow; if no alternative works,
    // every perfect matching uses edge_id (or none exists)
    return std::nullopt;
}

std::optional<std::vector<int>> tutte_violator(const Multigraph& g) {
    int n = g.order();
    if (n > 20) throw std::invalid_argument("tutte_violator: n <= 20 required");
    // adjacency bitmask of the underlying simple graph
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (s == full) continue; // proper subsets only
        std::uint32_t rest = full & ~s;
        int odd = 0;
        std::uint32_t todo = rest;
        while (todo) {
            int v = std::countr_zero(todo);
            // flood fill the component of v inside rest
            std::uint32_t comp = 1u << v, frontier = 1u << v;
            while (frontier) {
                std::uint32_t next = 0;
                std::uint32_t f = frontier;
                while (f) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj[u] & rest & ~comp;
                }
                comp |= next;
                frontier = next;
            }
            if (std::popcount(comp) % 2 == 1) ++odd;
            todo &= ~comp;
        }
        if (odd > std::popcount(s)) {
            std::vector<int> out;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1) out.push_back(v);
            return out;
        }
    }
    return std::nullopt;
}

DiamondGadget diamond_gadget_substitute(const Multigraph& g, int edge_id) {
    const MEdge* e = g.find_edge(edge_id);
    if (!e) throw std::invalid_argument("diamond_gadget_substitute: unknown edge id");
    bool has_parallel = false;
    for (int ei : g.incident(e->u)) {
        const MEdge& f = g.edge_at(ei);
        if (f.id != e->id && (f.u == e->v || f.v == e->v)) has_parallel = true;
    }
    if (!has_parallel)
        throw std::invalid_argument("diamond_gadget_substitute: edge has no parallel partner");

    DiamondGadget out;
    out.replaced_edge = edge_id;
    int n = g.order();
    int a = n, b = n + 1, c = n + 2, d = n + 3;
    out.diamond = {a, b, c, d};
    int next_id = 0;
    for (const auto& f : g.edges()) next_id = std::max(next_id, f.id + 1);
    std::vector<MEdge> edges;
    for (const auto& f : g.edges())
        if (f.id != edge_id) edges.push_back(f);
    out.e1 = next_id;
    out.e2 = next_id + 1;
    out.e3 = next_id + 2;
    edges.push_back({out.e1, a, e->u});
    edges.push_back({out.e2, b, e->v});
    edges.push_back({out.e3, c, d});
    edges.push_back({next_id + 3, a, c});
    edges.push_back({next_id + 4, a, d});
    edges.push_back({next_id + 5, b, c});
    edges.push_back({next_id + 6, b, d});
    out.expanded = Multigraph::with_ids(n + 4, std::move(edges));
    return out;
}

Matching map_gadget_matching(const Multigraph& g, const DiamondGadget& gadget,
                             const Matching& expanded_matching) {
    bool e1_used = false;
    Matching m;
    for (int id : expanded_matching.edge_ids) {
        if (id == gadget.e1) e1_used = true;
        if (g.find_edge(id) && id != gadget.replaced_edge) m.edge_ids.push_back(id);
    }
    if (e1_used) m.edge_ids.push_back(gadget.replaced_edge);
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return m;
}

} // namespace cind
