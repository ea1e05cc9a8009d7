#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

// Diamond-necklace N_k: k diamonds D_i = {a_i,b_i,c_i,d_i} (a_i b_i the
// missing edge) linked in a cycle by the edges a_i b_{i+1}.
struct NecklaceLayout {
    struct Diamond {
        int a, b, c, d;
    };
    int k;
    std::vector<Diamond> diamonds;
};

// k >= 2; order 4k, cubic, claw-free.
std::pair<Graph, NecklaceLayout> diamond_necklace(int k);

// The tightness family G_k: two end double-towers joined by a path whose 2k
// internal vertices are replaced by towers. Order 20k + 34. k >= 1.
Graph tightness_graph(int k);

// Named fixtures.
//   k4                four vertices, all edges
//   prism             C3 x K2
//   fig2_two_towers   n=14, two overlapping towers without a common base
//   fig3_three_towers n=24, three towers sharing one base triangle
//   fig5_half_cubic   n=12 cubic graph with induced cycle number n/2
//   tower             the 10-vertex tower; base = {0,1,2}, the two base
//                     vertices 0 and 1 are the attachment points (degree 2
//                     in the standalone fixture)
enum class FixtureName { k4, prism, fig2_two_towers, fig3_three_towers, fig5_half_cubic, tower };

Graph fixture(FixtureName name);
Graph fixture(const std::string& name); // accepts the enum spellings plus short aliases

Graph complete_bipartite(int k); // K_{k,k}

// The 17-vertex double tower (two towers sharing a base). Vertex 0 is the
// single degree-2 vertex.
Graph double_tower();

// Random connected cubic claw-free graph with exactly t triangle-units and
// d diamond-units (order 3t + 4d), by stub matching over units with
// rejection sampling. Throws if (t, d) admits no loop-free connected pairing
// after 1000 attempts.
Graph random_clawfree_cubic(int t, int d, std::uint64_t seed);

} // namespace cind
