#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

// Set of pairwise vertex-disjoint edges, named by edge id, ascending.
struct Matching {
    std::vector<int> edge_ids;
    int size() const { return static_cast<int>(edge_ids.size()); }
};

bool is_valid_matching(const Multigraph& g, const Matching& m);
bool is_perfect_matching(const Multigraph& g, const Matching& m);

// Maximum-cardinality matching via augmenting paths with blossom shrinking.
// Parallel bundles are canonicalized to their smallest edge id internally;
// deterministic for a fixed input.
Matching maximum_matching(const Multigraph& g);

// Perfect matching forced to contain the given edge: delete its endpoints,
// match the rest, re-add the edge. Absent iff no such matching exists.
std::optional<Matching> perfect_matching_containing(const Multigraph& g, int edge_id);

// Perfect matching forced to avoid the given edge, found by forcing some
// other edge at one of its endpoints into the matching. Absent iff every
// perfect matching uses the edge.
std::optional<Matching> perfect_matching_avoiding(const Multigraph& g, int edge_id);

// Brute-force Tutte condition check (n <= 20): some vertex set S with more
// than |S| odd components in g - S, if one exists. Absent iff g has a
// perfect matching.
std::optional<std::vector<int>> tutte_violator(const Multigraph& g);

// Replaces one edge of a parallel pair by a spliced diamond: the edge uv is
// removed and a diamond D = {a,b,c,d} (ab missing) is attached via
// e1 = au, e2 = bv; e3 = cd. Matchings of the expanded graph map back to
// matchings of the original.
struct DiamondGadget {
    Multigraph expanded;
    int replaced_edge;            // original edge id
    int e1, e2, e3;               // new edge ids
    std::array<int, 4> diamond;   // vertex ids a, b, c, d in the expanded graph
};

DiamondGadget diamond_gadget_substitute(const Multigraph& g, int edge_id);

// M = (M' cap E(g)) plus the replaced edge iff e1 in M'.
Matching map_gadget_matching(const Multigraph& g, const DiamondGadget& gadget,
                             const Matching& expanded_matching);

} // namespace cind
