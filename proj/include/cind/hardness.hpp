#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

// Gadget reduction from INDEPENDENT SET on cubic graphs to INDUCED CYCLE on
// maximum-degree-4 graphs: per source vertex v one incident edge is
// subdivided (twice when both endpoints chose it), giving v a degree-2
// partner v'; a path of order 3n-2 joins v to v'. C_v is the resulting
// induced cycle of length 3n through v, v' and the path.
struct ReductionMap {
    Graph source;
    Graph target;                          // n(target) = 3 n(source)^2, max degree 4
    std::vector<int> chosen_edge;          // per source vertex: index into source.edge_list()
    std::vector<int> partner;              // per source vertex v: the vertex v'
    std::vector<std::vector<int>> cycles;  // per source vertex: C_v as a cyclic vertex list
};

// Requires a cubic source graph.
ReductionMap reduce_independent_set(const Graph& g);

// Union of the C_v over an independent set; size 3 |I| n(source).
// Throws if I is not independent, naming a violating edge.
TwoRegularCertificate embed_independent_set(const ReductionMap& map, const std::vector<int>& I);

struct ExtractResult {
    std::optional<std::vector<int>> independent_set;
    std::string failure; // set when the certificate is not a union of C_v
};

// Inverts embed on certificates that are unions of C_v cycles; certificates
// in any other shape are reported as non-canonical rather than repaired.
ExtractResult extract_independent_set(const ReductionMap& map, const TwoRegularCertificate& cert);

} // namespace cind
