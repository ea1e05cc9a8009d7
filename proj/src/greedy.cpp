#include "cind/greedy.hpp"

#include <stdexcept>

#include "cind/cycles.hpp"

namespace cind {

std::pair<TwoRegularCertificate, GreedyTrace> greedy_two_regular(const Graph& g) {
    GreedyTrace trace;
    std::vector<char> alive(g.order(), 1);
    while (true) {
        auto cyc = shortest_cycle_in_subset(g, alive);
        if (!cyc) break;
        for (int v : *cyc) {
            alive[v] = 0;
            ++trace.cycle_vertices;
        }
        for (int v : *cyc)
            for (int w : g.neighbors(v))
                if (alive[w]) {
                    alive[w] = 0;
                    ++trace.removed_neighbors;
                }
        trace.cycles.push_back(std::move(*cyc));
    }
    TwoRegularCertificate cert = make_certificate(trace.cycles);
    return {std::move(cert), std::move(trace)};
}

Rational general_bound(long long n, long long m, int max_deg) {
    if (max_deg <= 2)
        throw std::invalid_argument("general_bound: undefined for max degree <= 2");
    return Rational(m - n + 1,
                    static_cast<long long>(max_deg - 2) * static_cast<long long>(max_deg - 1));
}

Rational regular_bound(long long n, int k) {
    if (k < 3) throw std::invalid_argument("regular_bound: requires k >= 3");
    return Rational(n, 2 * (k - 1LL)) + Rational(1, static_cast<long long>(k - 2) * (k - 1));
}

} // namespace cind
