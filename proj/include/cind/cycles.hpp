#pragma once

#include <optional>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

// A minimum-length cycle of g, or nullopt if g is a forest. A shortest cycle
// is chordless, hence induced. Ties break to the lexicographically smallest
// vertex sequence starting from the smallest vertex contained in any
// shortest cycle, so repeated runs are reproducible.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

// Same, restricted to the subgraph induced by vertices v with alive[v] != 0.
std::optional<std::vector<int>> shortest_cycle_in_subset(const Graph& g,
                                                         const std::vector<char>& alive);

} // namespace cind
