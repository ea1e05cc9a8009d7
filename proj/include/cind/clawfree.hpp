#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cind/graph.hpp"
#include "cind/rational.hpp"

namespace cind {

// ---------------------------------------------------------------------------
// Triangle-diamond partition
// ---------------------------------------------------------------------------

// Unique partition of a connected cubic claw-free graph != K4 into vertex
// sets inducing triangles or diamonds.
struct UnitPartition {
    struct Unit {
        enum class Kind { triangle, diamond };
        Kind kind;
        // triangle: 3 vertices ascending.
        // diamond: {a, b, c, d} with ab the missing edge (a < b), cd the
        // inner edge (c < d); a and b carry the unit's two outside edges.
        std::vector<int> vertices;
    };
    std::vector<Unit> units; // sorted by smallest contained vertex
    std::vector<int> unit_of;

    int triangle_count() const;
    int diamond_count() const;
};

UnitPartition triangle_diamond_partition(const Graph& g);

// ---------------------------------------------------------------------------
// Towers
// ---------------------------------------------------------------------------

// Diamond unit + middle triangle + base triangle. The two base vertices
// t0 < t1 carry the tower's outside edges; t2 is the apex toward the middle.
struct Tower {
    int diamond_unit, middle_unit, base_unit;
    int a, b, c, d;    // diamond; a adj m1, b adj m2
    int m0, m1, m2;    // middle; m0 adj t2
    int t0, t1, t2;    // base
    std::vector<int> vertices; // all 10, ascending

    std::vector<int> five_cycle() const;    // a - min(c,d) - b - m2 - m1
    std::vector<int> alt_five_cycle() const; // the max(c,d) twin
    std::vector<int> base_triangle() const { return {t0, t1, t2}; }
};

// Every diamond unit whose two outside edges enter one triangle unit whose
// remaining neighbor is another triangle unit yields a tower.
std::vector<Tower> find_towers(const Graph& g, const UnitPartition& p);

// ---------------------------------------------------------------------------
// Reduction surgeries and terminal cases
// ---------------------------------------------------------------------------

struct SurgeryRecord {
    enum class Kind { bridging_diamond, twin_triangles, tower_pair };
    Kind kind;
    Graph parent;                     // graph the surgery was applied to
    std::vector<int> child_to_parent; // child vertex id -> parent vertex id
    std::vector<int> deleted;         // parent ids, ascending
    int v1 = -1, v2 = -1;             // endpoints of the edge added in the child (parent ids)
    // bridging-diamond roles
    int a = -1, b = -1, c = -1, d = -1;
    // twin-triangle roles
    int u1 = -1, w1 = -1, x1 = -1, u2 = -1, w2 = -1, x2 = -1;
    // tower-pair roles
    int r2 = -1, r3 = -1;
    std::vector<int> cycle1, cycle2, base_tri;
};

struct ReduceOutcome {
    enum class Kind { terminal, surgery, irreducible };
    Kind kind = Kind::irreducible;
    TwoRegularCertificate certificate; // terminal only
    std::string terminal_name;         // k4 | prism | necklace | fig2 | fig3
    Graph reduced;                     // surgery only
    SurgeryRecord record;              // surgery only
};

// One reduction step on a connected cubic claw-free graph: a terminal answer
// for the base cases, a surgery strictly shrinking the graph, or
// "irreducible" when no reduction applies and the graph proceeds
// to the main construction.
ReduceOutcome reduce_step(const Graph& g);

// Extends a child certificate back through a surgery, using the recorded
// recorded extension rule; validates against the recorded parent graph.
TwoRegularCertificate apply_expansion(const SurgeryRecord& rec,
                                      const TwoRegularCertificate& child);

// ---------------------------------------------------------------------------
// Unit contraction graph H and the piece decomposition
// ---------------------------------------------------------------------------

struct ContractionH {
    enum class Color : unsigned char { uncolored, red, yellow };

    Multigraph graph;       // H: towers contracted to red degree-2 vertices,
                            // remaining triangle units to degree-3 vertices
    std::vector<Color> color;
    std::vector<int> tower_of; // H vertex -> index into towers, or -1
    std::vector<int> unit_of;  // H vertex -> triangle unit index, or -1
    std::vector<Tower> towers;
    UnitPartition partition;
    // per H edge id: the underlying G edge (gx, gy), gx inside the part of
    // the H edge's u endpoint and gy inside the part of v
    std::vector<std::pair<int, int>> edge_g;

    int g_order_of_part(int hv) const; // 10 for towers, 3 for triangle units
    int g_endpoint_in_part(int h_edge_id, int hv) const;
};

// Requires: g connected cubic claw-free with no reduction applicable (reduce_step
// returns irreducible). Every diamond then sits in a tower and towers are
// pairwise vertex-disjoint.
ContractionH build_contraction(const Graph& g, UnitPartition partition, std::vector<Tower> towers);

struct BlockPiece {
    std::vector<int> h_uncolored; // V(B_i) as H ids, ascending
    Multigraph B;                 // local ids 0..|V(B_i)|-1, cubic, 2-connected, loop-free
    struct ColoredPath {
        std::vector<int> interior; // colored H vertices in path order
        std::vector<int> h_edges;  // |interior| + 1 H edge ids, endpoint-to-endpoint
        int hu, hv;                // uncolored endpoints (H ids), hu <= hv orientation
        int cactus = -1;           // owning cactus piece
        int b_edge = -1;           // the colored edge's id in B
    };
    struct EdgeInfo {
        bool colored = false;
        int h_edge = -1; // direct edges
        int path = -1;   // colored edges
    };
    std::vector<ColoredPath> paths;
    std::vector<EdgeInfo> edge_info; // indexed by B edge id
};

struct CactusPiece {
    std::vector<int> hverts;                      // colored H ids, ascending
    std::vector<std::vector<int>> cycle_verts;    // per cactus cycle: H vertex order
    std::vector<std::vector<int>> cycle_edges;    // aligned H edge ids
    std::vector<char> on_cycle;                   // indexed by position in hverts
};

struct PieceDecomposition {
    ContractionH h;
    std::vector<BlockPiece> blocks; // sorted by smallest H vertex
    std::vector<CactusPiece> cacti; // sorted by smallest H vertex
    struct TreeNode {
        bool is_block;
        int index;   // into blocks or cacti
        int parent = -1;
        int level = 0;
        std::vector<int> children;
    };
    std::vector<TreeNode> tree; // node 0 is the root block when blocks exist
    // per colored H vertex: owning cactus, and owning block path if any
    std::vector<int> cactus_of;          // H vertex -> cactus index or -1
    std::vector<int> path_block_of;      // H vertex -> block index or -1
    std::vector<int> path_index_of;      // H vertex -> path index within that block or -1
};

PieceDecomposition build_pieces(ContractionH h);

// Lifts a cycle of H (vertex/edge rings, verts[i] -edges[i]- verts[i+1]) to
// an induced cycle of g: two vertices per traversed triangle unit, the two
// base attachment vertices per traversed tower.
std::vector<int> lift_cycle(const ContractionH& h, const Graph& g,
                            const std::vector<int>& hverts, const std::vector<int>& hedges);

// ---------------------------------------------------------------------------
// Contribution ledger (cactus piece accounting)
// ---------------------------------------------------------------------------

struct CactusLedger {
    struct Entry {
        int hvert;
        std::string case_name; // 1, 2, 3, 4, 5a, 5b, 6a, 6b, 6c
        Rational a;            // averaged contribution minus 13/20 of the part order
    };
    std::vector<Entry> entries;
    Rational avg_total;    // sum of averaged a(v); nonnegative per the tree argument
    Rational chosen_total; // realized contribution minus (13/20) n(h(piece))
    int chosen = 1;        // which independent set was taken
    int contribution = 0;  // |C cap h(piece)| for the chosen set
    int n_of_h = 0;
    bool red_leaf_path = false; // piece was an all-red leaf path
};

// ---------------------------------------------------------------------------
// The constructive lower bound
// ---------------------------------------------------------------------------

struct ClawfreeReport {
    int components = 0;
    int surgeries_towersiamond = 0, surgeries_triangles = 0, surgeries_towers = 0;
    int terminal_k4 = 0, terminal_prism = 0, terminal_necklace = 0;
    int terminal_fig2 = 0, terminal_fig3 = 0;
    int main_constructions = 0;
    int blocks_processed = 0, cacti_processed = 0;
    std::vector<CactusLedger> ledgers;
    int surgeries() const { return surgeries_towersiamond + surgeries_triangles + surgeries_towers; }
    int pieces() const { return blocks_processed + cacti_processed; }
};

// Produces a verified induced 2-regular set of size > 13 n / 20 (that is,
// at least floor(13n/20) + 1 per connected component). Requires g cubic and
// claw-free; components are handled independently.
TwoRegularCertificate construct_large_two_regular(const Graph& g, ClawfreeReport* report = nullptr);

} // namespace cind
