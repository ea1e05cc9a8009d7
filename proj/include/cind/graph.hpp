#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cind {

// Simple undirected graph, vertex ids 0..n-1, sorted adjacency lists.
// No loops, no parallel edges; immutable after construction.
class Graph {
public:
    Graph() = default;

    // Validates: ids in range, no loops, no duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    // Subgraph induced on `verts` (need not be sorted); vertices are
    // renumbered 0..|verts|-1 in ascending order of original id. If
    // `old_id` is non-null it receives the new->old map.
    Graph induced_subgraph(std::span<const int> verts, std::vector<int>* old_id = nullptr) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Vertex set inducing a 2-regular subgraph, decomposed into its cycles.
// Canonical form: vertices ascending; each cycle starts at its smallest
// vertex and runs toward the smaller of its two neighbors; cycles sorted
// by first vertex.
struct TwoRegularCertificate {
    std::vector<int> vertices;
    std::vector<std::vector<int>> cycles;
    int size() const { return static_cast<int>(vertices.size()); }
};

struct TwoRegularCheck {
    std::optional<TwoRegularCertificate> certificate;
    int offending_vertex = -1;
    int offending_degree = -1;
    bool ok() const { return certificate.has_value(); }
};

// Succeeds iff every vertex of s has exactly two neighbors inside s.
// On failure names a vertex whose in-set degree differs from 2.
TwoRegularCheck is_two_regular_induced(const Graph& g, std::span<const int> s);

struct Claw {
    int center;
    std::array<int, 3> leaves;
};

// First claw in scan order (center ascending, leaves lexicographic), if any.
std::optional<Claw> find_claw(const Graph& g);
bool is_claw_free(const Graph& g);

bool is_cubic(const Graph& g);
int max_degree(const Graph& g);

// Components in ascending order of minimum vertex id; each sorted.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Undirected multigraph: parallel edges allowed, loops forbidden.
// Edge ids are explicit and stay stable under vertex deletion.
struct MEdge {
    int id;
    int u;
    int v;
};

class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int n, const std::vector<std::pair<int, int>>& edges); // ids 0..m-1
    static Multigraph with_ids(int n, std::vector<MEdge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(inc_[v].size()); }
    const std::vector<MEdge>& edges() const { return edges_; }
    const MEdge& edge_at(int index) const { return edges_[index]; }
    // Indices into edges() of the edges incident to v, ascending by edge id.
    std::span<const int> incident(int v) const { return inc_[v]; }
    const MEdge* find_edge(int id) const;

    bool is_cubic() const;
    bool is_connected() const;

    // Deletes the given vertices (and their edges); remaining vertices are
    // renumbered densely, edge ids preserved. old_of_new maps new->old ids.
    Multigraph remove_vertices(std::span<const int> verts, std::vector<int>* old_of_new = nullptr) const;

private:
    int n_ = 0;
    std::vector<MEdge> edges_;
    std::vector<std::vector<int>> inc_;
    void build_incidence();
};

// Lossless view of a simple graph as a multigraph (edge ids in edge_list order).
Multigraph to_multigraph(const Graph& g);

// Collapses parallel edges; explicit because it loses edge identity.
Graph collapse_to_graph(const Multigraph& mg);

// Canonicalize a cyclically-ordered vertex list (smallest vertex first,
// direction toward the smaller neighbor).
std::vector<int> canonical_cycle(std::vector<int> cycle);

// Assemble a certificate from cycles (canonicalizes, sorts, collects vertices).
TwoRegularCertificate make_certificate(std::vector<std::vector<int>> cycles);

} // namespace cind
