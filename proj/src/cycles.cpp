#include "cind/cycles.hpp"

#include <algorithm>
#include <queue>

namespace cind {

namespace {

constexpr int kInf = 1 << 29;

// girth of the alive-induced subgraph via BFS from every vertex
int girth(const Graph& g, const std::vector<char>& alive) {
    int best = kInf;
    int n = g.order();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        if (!alive[s]) continue;
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (!alive[w]) continue;
                if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && parent[w] != u) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

// lexicographically smallest cycle of length exactly `len` through `root`
// using only vertices > root (besides the root); DFS tries neighbors in
// ascending order, so the first complete cycle is the smallest
struct LexSearch {
    const Graph& g;
    const std::vector<char>& alive;
    int root;
    int len;
    std::vector<int> dist_to_root; // in the restricted graph
    std::vector<char> used;
    std::vector<int> path;

    bool dfs(int u, int depth) {
        if (depth == len - 1) {
            if (g.has_edge(u, root)) return true;
            return false;
        }
        for (int w : g.neighbors(u)) {
            if (!alive[w] || w <= root || used[w]) continue;
            if (dist_to_root[w] > len - depth - 1) continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs(w, depth + 1)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> shortest_cycle_in_subset(const Graph& g,
                                                         const std::vector<char>& alive) {
    int n = g.order();
    int len = girth(g, alive);
    if (len >= kInf) return std::nullopt;

    for (int root = 0; root < n; ++root) {
        if (!alive[root]) continue;
        // BFS distances to root within {v > root or v == root}
        std::vector<int> dist(n, kInf);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (alive[w] && w > root && dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        LexSearch ls{g, alive, root, len, std::move(dist), std::vector<char>(n, 0), {root}};
        ls.used[root] = 1;
        if (ls.dfs(root, 0)) return ls.path;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    return shortest_cycle_in_subset(g, std::vector<char>(g.order(), 1));
}

} // namespace cind
