#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

// Deterministic RNG for generators and test suites. mt19937_64 has a
// standard-pinned stream; we avoid std distributions because their output
// is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(int num, int den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

// Erdos-Renyi-style graph: each pair kept with probability num/den.
Graph random_graph(int n, int prob_num, int prob_den, Rng& rng);

// Random cubic simple graph via stub matching (rejection sampling).
Graph random_cubic_graph(int n, Rng& rng);

// Random loop-free multigraph with m edges (parallel edges allowed).
Multigraph random_multigraph(int n, int m, Rng& rng);

// Random 2-connected cubic loop-free multigraph via stub matching.
Multigraph random_cubic_multigraph_2connected(int n, Rng& rng);

} // namespace cind
