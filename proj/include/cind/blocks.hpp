#pragma once

#include <vector>

#include "cind/graph.hpp"

namespace cind {

// Biconnected decomposition of a multigraph. Every edge lies in exactly one
// block; a block is trivial iff it is a single non-parallel edge; bridges are
// exactly the trivial blocks' edges. A parallel pair forms a 2-cycle block.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks; // edge-id sets, each ascending; blocks sorted by min edge id
    std::vector<int> cut_vertices;        // ascending
    std::vector<int> bridges;             // edge ids, ascending

    // Vertices touched by the given block, ascending.
    static std::vector<int> block_vertices(const Multigraph& g, const std::vector<int>& block_edges);
};

BlockDecomposition biconnected_decomposition(const Multigraph& g);

// True iff the block's edges form a single cycle (every touched vertex has
// exactly two of the block's edges).
bool block_is_cycle(const Multigraph& g, const std::vector<int>& block_edges);

} // namespace cind
