#include "cind/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cind {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative order");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("graph: loop edge");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced_subgraph(std::span<const int> verts, std::vector<int>* old_id) const {
    std::vector<int> sorted(verts.begin(), verts.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> new_id(n_, -1);
    for (size_t i = 0; i < sorted.size(); ++i) new_id[sorted[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : sorted)
        for (int v : adj_[u])
            if (u < v && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    if (old_id) *old_id = sorted;
    return from_edges(static_cast<int>(sorted.size()), edges);
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    if (cycle.empty()) return cycle;
    size_t k = cycle.size();
    size_t pos = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    std::vector<int> out(k);
    int prev = cycle[(pos + k - 1) % k];
    int next = cycle[(pos + 1) % k];
    bool forward = next <= prev;
    for (size_t i = 0; i < k; ++i)
        out[i] = forward ? cycle[(pos + i) % k] : cycle[(pos + k - i) % k];
    return out;
}

TwoRegularCertificate make_certificate(std::vector<std::vector<int>> cycles) {
    TwoRegularCertificate cert;
    for (auto& c : cycles) cert.cycles.push_back(canonical_cycle(std::move(c)));
    std::sort(cert.cycles.begin(), cert.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& c : cert.cycles) cert.vertices.insert(cert.vertices.end(), c.begin(), c.end());
    std::sort(cert.vertices.begin(), cert.vertices.end());
    return cert;
}

TwoRegularCheck is_two_regular_induced(const Graph& g, std::span<const int> s) {
    std::vector<char> in(g.order(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex id out of range");
        in[v] = 1;
    }
    TwoRegularCheck res;
    for (int v = 0; v < g.order(); ++v) {
        if (!in[v]) continue;
        int d = 0;
        for (int w : g.neighbors(v)) d += in[w];
        if (d != 2) {
            res.offending_vertex = v;
            res.offending_degree = d;
            return res;
        }
    }
    // every in-set vertex has exactly two in-set neighbors: walk out the cycles
    std::vector<char> seen(g.order(), 0);
    std::vector<std::vector<int>> cycles;
    for (int v = 0; v < g.order(); ++v) {
        if (!in[v] || seen[v]) continue;
        std::vector<int> cyc;
        int prev = -1, cur = v;
        do {
            cyc.push_back(cur);
            seen[cur] = 1;
            int nxt = -1;
            for (int w : g.neighbors(cur))
                if (in[w] && w != prev && (nxt == -1)) nxt = w;
            // the first in-set neighbor != prev; for the start vertex this
            // picks the smaller neighbor, fixing the direction
            prev = cur;
            cur = nxt;
        } while (cur != v);
        cycles.push_back(std::move(cyc));
    }
    res.certificate = make_certificate(std::move(cycles));
    return res;
}

std::optional<Claw> find_claw(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k) {
                    if (g.has_edge(nb[i], nb[k]) || g.has_edge(nb[j], nb[k])) continue;
                    return Claw{v, {nb[i], nb[j], nb[k]}};
                }
            }
    }
    return std::nullopt;
}

bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.order(); ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v}, members;
        comp[v] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = comp[v];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<MEdge> es;
    es.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
        es.push_back({static_cast<int>(i), edges[i].first, edges[i].second});
    *this = with_ids(n, std::move(es));
}

Multigraph Multigraph::with_ids(int n, std::vector<MEdge> edges) {
    Multigraph g;
    g.n_ = n;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("multigraph: vertex id out of range");
        if (e.u == e.v) throw std::invalid_argument("multigraph: loop edge");
    }
    std::sort(edges.begin(), edges.end(), [](const MEdge& a, const MEdge& b) { return a.id < b.id; });
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i].id == edges[i - 1].id)
            throw std::invalid_argument("multigraph: duplicate edge id");
    g.edges_ = std::move(edges);
    g.build_incidence();
    return g;
}

void Multigraph::build_incidence() {
    inc_.assign(n_, {});
    for (size_t i = 0; i < edges_.size(); ++i) {
        inc_[edges_[i].u].push_back(static_cast<int>(i));
        inc_[edges_[i].v].push_back(static_cast<int>(i));
    }
}

const MEdge* Multigraph::find_edge(int id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const MEdge& e, int x) { return e.id < x; });
    if (it == edges_.end() || it->id != id) return nullptr;
    return &*it;
}

bool Multigraph::is_cubic() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 3) return false;
    return true;
}

bool Multigraph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int ei : inc_[u]) {
            const MEdge& e = edges_[ei];
            int w = e.u == u ? e.v : e.u;
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
        }
    }
    return cnt == n_;
}

Multigraph Multigraph::remove_vertices(std::span<const int> verts, std::vector<int>* old_of_new) const {
    std::vector<char> gone(n_, 0);
    for (int v : verts) gone[v] = 1;
    std::vector<int> new_id(n_, -1), old_id;
    for (int v = 0; v < n_; ++v)
        if (!gone[v]) {
            new_id[v] = static_cast<int>(old_id.size());
            old_id.push_back(v);
        }
    std::vector<MEdge> es;
    for (const auto& e : edges_)
        if (!gone[e.u] && !gone[e.v]) es.push_back({e.id, new_id[e.u], new_id[e.v]});
    int nn = static_cast<int>(old_id.size());
    if (old_of_new) *old_of_new = std::move(old_id);
    return with_ids(nn, std::move(es));
}

Multigraph to_multigraph(const Graph& g) {
    return Multigraph(g.order(), g.edge_list());
}

Graph collapse_to_graph(const Multigraph& mg) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : mg.edges()) edges.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(mg.order(), edges);
}

} // namespace cind
