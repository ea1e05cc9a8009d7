#pragma once

#include <utility>
#include <vector>

#include "cind/graph.hpp"
#include "cind/rational.hpp"

namespace cind {

// Record of one greedy run: the cycles in removal order, the number N of
// deleted vertices that lie on no chosen cycle, and ell = sum of cycle sizes.
struct GreedyTrace {
    std::vector<std::vector<int>> cycles;
    long long removed_neighbors = 0; // N
    long long cycle_vertices = 0;    // ell
};

// Repeatedly removes a shortest (hence induced) cycle together with its
// closed neighborhood until the residual graph is a forest. The union of the
// chosen cycles is an induced 2-regular set of g.
std::pair<TwoRegularCertificate, GreedyTrace> greedy_two_regular(const Graph& g);

// (m - n + 1) / ((max_deg - 2)(max_deg - 1)); requires max_deg >= 3.
Rational general_bound(long long n, long long m, int max_deg);

// n/(2(k-1)) + 1/((k-2)(k-1)) for k-regular graphs; requires k >= 3.
// Equals general_bound(n, k*n/2, k).
Rational regular_bound(long long n, int k);

} // namespace cind
