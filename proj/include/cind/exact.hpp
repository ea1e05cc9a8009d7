#pragma once

#include <optional>

#include "cind/graph.hpp"

namespace cind {

struct SearchBudget {
    std::optional<long long> node_limit;
    std::optional<double> time_limit_seconds;
};

struct ExactResult {
    TwoRegularCertificate certificate;
    bool optimal = false;
    long long nodes_explored = 0;
};

// Exact maximum induced 2-regular set via depth-first branch and bound over
// an in/out/undecided vertex labeling, one connected component at a time.
// The greedy certificate seeds the incumbent, so the result never falls
// below the certified greedy bound. With an exhausted budget the best
// certificate found so far is returned with optimal = false. Deterministic
// for a fixed graph and node budget.
ExactResult max_induced_two_regular(const Graph& g, const SearchBudget& budget = {});

// Independent oracle: maximum over all 2^n vertex subsets (n <= 20 enforced)
// of the subset size subject to the 2-regularity degree check.
int brute_force_oracle(const Graph& g);

} // namespace cind
