#include "cind/exact.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>

#include "cind/greedy.hpp"

namespace cind {

namespace {

enum : signed char { UNDEC = 0, IN = 1, OUT = 2 };

struct Solver {
    const Graph& g;
    int n;
    std::vector<signed char> label;
    std::vector<int> in_deg, und_deg;
    int in_count = 0, und_count = 0;
    std::vector<int> trail;

    long long nodes = 0;
    const SearchBudget& budget;
    std::chrono::steady_clock::time_point start;
    bool aborted = false;

    int best_size = -1;
    std::vector<signed char> best_label;

    Solver(const Graph& graph, const SearchBudget& b)
        : g(graph), n(graph.order()), label(n, UNDEC), in_deg(n, 0), und_deg(n, 0),
          budget(b), start(std::chrono::steady_clock::now()) {
        und_count = n;
        for (int v = 0; v < n; ++v) und_deg[v] = g.degree(v);
    }

    bool set_label(int v, signed char lab, std::vector<int>& work) {
        if (label[v] != UNDEC) return label[v] == lab;
        label[v] = lab;
        trail.push_back(v);
        --und_count;
        if (lab == IN) ++in_count;
        for (int w : g.neighbors(v)) {
            --und_deg[w];
            if (lab == IN) ++in_deg[w];
            work.push_back(w);
        }
        work.push_back(v);
        return true;
    }

    bool apply(int v, signed char lab) {
        std::vector<int> work;
        if (!set_label(v, lab, work)) return false;
        while (!work.empty()) {
            int u = work.back();
            work.pop_back();
            if (label[u] == OUT) continue;
            if (label[u] == IN) {
                if (in_deg[u] > 2) return false;
                if (in_deg[u] + und_deg[u] < 2) return false;
                if (in_deg[u] == 2) {
                    for (int w : g.neighbors(u))
                        if (label[w] == UNDEC && !set_label(w, OUT, work)) return false;
                } else if (in_deg[u] + und_deg[u] == 2) {
                    for (int w : g.neighbors(u))
                        if (label[w] == UNDEC && !set_label(w, IN, work)) return false;
                }
            } else { // undecided: out if it can never reach in-degree 2
                if (in_deg[u] > 2 || in_deg[u] + und_deg[u] < 2)
                    if (!set_label(u, OUT, work)) return false;
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            signed char lab = label[v];
            label[v] = UNDEC;
            ++und_count;
            if (lab == IN) --in_count;
            for (int w : g.neighbors(v)) {
                ++und_deg[w];
                if (lab == IN) --in_deg[w];
            }
        }
    }

    bool budget_exhausted() {
        if (budget.node_limit && nodes > *budget.node_limit) return true;
        if (budget.time_limit_seconds && (nodes & 1023) == 1) { // checks node 1 as well
            auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
            if (elapsed.count() > *budget.time_limit_seconds) return true;
        }
        return false;
    }

    void dfs() {
        if (aborted) return;
        ++nodes;
        if (budget_exhausted()) {
            aborted = true;
            return;
        }
        if (in_count + und_count <= best_size) return;
        if (und_count == 0) {
            // propagation guarantees every IN vertex has in-degree exactly 2 here
            best_size = in_count;
            best_label = label;
            return;
        }
        // branch on the undecided vertex with most IN neighbors, smallest id wins ties
        int bv = -1;
        for (int v = 0; v < n; ++v)
            if (label[v] == UNDEC && (bv < 0 || in_deg[v] > in_deg[bv])) bv = v;
        size_t mark = trail.size();
        if (apply(bv, IN)) dfs();
        undo_to(mark);
        if (aborted) return;
        if (apply(bv, OUT)) dfs();
        undo_to(mark);
    }
};

} // namespace

ExactResult max_induced_two_regular(const Graph& g, const SearchBudget& budget) {
    ExactResult result;
    result.optimal = true;
    std::vector<std::vector<int>> all_cycles;
    long long nodes_total = 0;

    for (const auto& comp : connected_components(g)) {
        std::vector<int> old_id;
        Graph sub = g.induced_subgraph(comp, &old_id);

        auto [greedy_cert, greedy_trace] = greedy_two_regular(sub);

        SearchBudget remaining = budget; // node limit is global across components
        if (remaining.node_limit) *remaining.node_limit -= nodes_total;
        Solver s(sub, remaining);
        s.best_size = greedy_cert.size();
        s.best_label.assign(sub.order(), OUT);
        for (int v : greedy_cert.vertices) s.best_label[v] = IN;
        s.dfs();
        nodes_total += s.nodes;
        if (s.aborted) result.optimal = false;

        std::vector<int> in_set;
        for (int v = 0; v < sub.order(); ++v)
            if (s.best_label[v] == IN) in_set.push_back(old_id[v]);
        auto check = is_two_regular_induced(g, in_set);
        if (!check.ok()) throw std::logic_error("exact: produced an invalid certificate");
        for (auto& c : check.certificate->cycles) all_cycles.push_back(std::move(c));
    }
    result.certificate = make_certificate(std::move(all_cycles));
    result.nodes_explored = nodes_total;
    return result;
}

int brute_force_oracle(const Graph& g) {
    int n = g.order();
    if (n > 20) throw std::invalid_argument("brute_force_oracle: n <= 20 required");
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= 1u << w;
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int size = std::popcount(s);
        if (size <= best) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((s >> v) & 1)
                if (std::popcount(adj[v] & s) != 2) ok = false;
        if (ok) best = size;
    }
    return best;
}

} // namespace cind
