#include "cind/bench.hpp"

#include <sstream>

#include "cind/clawfree.hpp"
#include "cind/exact.hpp"
#include "cind/families.hpp"
#include "cind/greedy.hpp"
#include "cind/hardness.hpp"
#include "cind/matching.hpp"
#include "cind/randgen.hpp"

namespace cind {

namespace {

CriterionResult fixtures_suite() {
    CriterionResult r{"fixture-equalities", true, ""};
    std::ostringstream fails;
    auto expect = [&](const Graph& g, const char* name, int want) {
        ExactResult res = max_induced_two_regular(g);
        if (!res.optimal || res.certificate.size() != want) {
            r.passed = false;
            fails << ' ' << name << "=" << res.certificate.size() << "(want " << want << ")";
        }
    };
    expect(fixture(FixtureName::k4), "k4", 3);
    expect(fixture(FixtureName::prism), "prism", 4);
    expect(fixture(FixtureName::fig5_half_cubic), "fig5", 6);
    expect(fixture(FixtureName::fig2_two_towers), "fig2", 10);
    expect(diamond_necklace(2).first, "N2", 6);
    expect(diamond_necklace(3).first, "N3", 9);
    expect(complete_bipartite(4), "K44", 4);
    r.detail = r.passed ? "7 fixture values exact" : fails.str();
    return r;
}

CriterionResult oracle_suite(std::uint64_t seed) {
    CriterionResult r{"oracle-equivalence", true, ""};
    Rng rng(seed);
    int checked = 0, small_checked = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 4 + rng.below(11); // 4..14
        Graph g = random_graph(n, 25 + rng.below(50), 100, rng);
        int want = brute_force_oracle(g);
        ExactResult res = max_induced_two_regular(g);
        if (!res.optimal || res.certificate.size() != want) {
            r.passed = false;
            r.detail = "mismatch on random graph " + std::to_string(i);
            return r;
        }
        ++checked;
    }
    for (int i = 0; i < 300; ++i) {
        int n = 4 + rng.below(5); // 4..8
        Graph g = random_graph(n, 30 + rng.below(45), 100, rng);
        if (connected_components(g).size() != 1) continue;
        int want = brute_force_oracle(g);
        ExactResult res = max_induced_two_regular(g);
        if (!res.optimal || res.certificate.size() != want) {
            r.passed = false;
            r.detail = "mismatch on small connected graph " + std::to_string(i);
            return r;
        }
        ++small_checked;
    }
    r.detail = std::to_string(checked) + " random + " + std::to_string(small_checked) +
               " small connected graphs agree with brute force";
    return r;
}

CriterionResult greedy_suite(std::uint64_t seed) {
    CriterionResult r{"greedy-bound", true, ""};
    Rng rng(seed + 1);
    int general = 0;
    while (general < 200) {
        int n = 5 + rng.below(12); // 5..16
        Graph g = random_graph(n, 30 + rng.below(45), 100, rng);
        if (max_degree(g) < 3) continue;
        auto [cert, trace] = greedy_two_regular(g);
        Rational bound = general_bound(g.order(), g.size(), max_degree(g));
        if (Rational(trace.cycle_vertices) < bound) {
            r.passed = false;
            r.detail = "greedy fell below the general bound";
            return r;
        }
        if (Rational(trace.removed_neighbors) >
            Rational(trace.cycle_vertices) * Rational(max_degree(g) - 2)) {
            r.passed = false;
            r.detail = "neighbor-count inequality violated";
            return r;
        }
        ++general;
    }
    for (int i = 0; i < 50; ++i) {
        int n = 8 + 2 * rng.below(5); // 8..16 even
        Graph g = random_cubic_graph(n, rng);
        auto [cert, trace] = greedy_two_regular(g);
        if (Rational(trace.cycle_vertices) <= Rational(g.order(), 4)) {
            r.passed = false;
            r.detail = "cubic greedy did not exceed n/4";
            return r;
        }
    }
    r.detail = "200 general bounds + 50 cubic strict bounds hold as exact rationals";
    return r;
}

CriterionResult clawfree_suite(std::uint64_t seed) {
    CriterionResult r{"clawfree-constructor", true, ""};
    // deterministic mixed parameter sweep, small cases first so the exact
    // cross-check below has material
    std::vector<std::pair<int, int>> params = {{2, 0}, {0, 2}, {2, 1}, {4, 0}, {2, 2}, {0, 3}, {4, 1}};
    for (int i = 0; static_cast<int>(params.size()) < 104; ++i) {
        int t = 2 * (i % 8);        // 0..14
        int d = (i * 7 + 3) % 13;   // 0..12
        if (t + d == 0 || (t == 0 && d < 2)) continue;
        if (3 * t + 4 * d > 100) continue;
        params.emplace_back(t, d);
    }
    int built = 0, crosschecked = 0;
    for (size_t i = 0; i < params.size(); ++i) {
        auto [t, d] = params[i];
        Graph g = random_clawfree_cubic(t, d, seed + 10 * i);
        TwoRegularCertificate cert = construct_large_two_regular(g);
        auto check = is_two_regular_induced(g, cert.vertices);
        long long threshold = 13LL * g.order() / 20 + 1;
        if (!check.ok() || cert.size() < threshold) {
            r.passed = false;
            r.detail = "invalid or undersized certificate for t=" + std::to_string(t) +
                       " d=" + std::to_string(d);
            return r;
        }
        if (g.order() <= 14) {
            ExactResult ex = max_induced_two_regular(g);
            if (!ex.optimal || cert.size() > ex.certificate.size()) {
                r.passed = false;
                r.detail = "constructor exceeded the exact optimum";
                return r;
            }
            ++crosschecked;
        }
        ++built;
    }
    r.detail = std::to_string(built) + " graphs above floor(13n/20)+1, " +
               std::to_string(crosschecked) + " cross-checked against the exact solver";
    return r;
}

CriterionResult tightness_suite() {
    CriterionResult r{"tightness-family", true, ""};
    for (int k = 1; k <= 5; ++k) {
        Graph g = tightness_graph(k);
        if (g.order() != 20 * k + 34) {
            r.passed = false;
            r.detail = "G_" + std::to_string(k) + " has wrong order";
            return r;
        }
        TwoRegularCertificate cert = construct_large_two_regular(g);
        if (cert.size() < 13 * k + 23) {
            r.passed = false;
            r.detail = "G_" + std::to_string(k) + " bound missed: " + std::to_string(cert.size());
            return r;
        }
    }
    r.detail = "G_1..G_5 reach 13k+23 at order 20k+34";
    return r;
}

CriterionResult matching_suite(std::uint64_t seed) {
    CriterionResult r{"one-extendability", true, ""};
    Rng rng(seed + 2);
    for (int i = 0; i < 100; ++i) {
        int n = 4 + 2 * rng.below(7); // 4..16 even
        Multigraph g = random_cubic_multigraph_2connected(n, rng);
        for (const auto& e : g.edges()) {
            auto m = perfect_matching_containing(g, e.id);
            bool ok = m && is_perfect_matching(g, *m);
            if (ok) {
                bool contains = false;
                for (int id : m->edge_ids) contains |= id == e.id;
                ok = contains;
            }
            if (!ok) {
                r.passed = false;
                r.detail = "edge " + std::to_string(e.id) + " of multigraph " + std::to_string(i) +
                           " is not extendable";
                return r;
            }
        }
    }
    int tutte_checked = 0;
    for (int i = 0; i < 300; ++i) {
        int n = 2 + rng.below(11); // 2..12
        Multigraph g = random_multigraph(n, rng.below(2 * n + 2), rng);
        bool perfect = is_perfect_matching(g, maximum_matching(g));
        bool violated = tutte_violator(g).has_value();
        if (perfect == violated) {
            r.passed = false;
            r.detail = "Tutte oracle disagrees with matching perfection on graph " +
                       std::to_string(i);
            return r;
        }
        ++tutte_checked;
    }
    r.detail = "100 cubic multigraphs 1-extendable, " + std::to_string(tutte_checked) +
               " Tutte checks agree";
    return r;
}

CriterionResult reduction_suite(std::uint64_t seed) {
    CriterionResult r{"reduction-forward", true, ""};
    Rng rng(seed + 3);
    std::vector<Graph> sources{fixture(FixtureName::k4), fixture(FixtureName::prism)};
    sources.push_back(random_cubic_graph(8, rng));
    sources.push_back(random_cubic_graph(10, rng));
    int embeds = 0;
    for (const Graph& g : sources) {
        int n = g.order();
        ReductionMap map = reduce_independent_set(g);
        if (map.target.order() != 3 * n * n || max_degree(map.target) != 4) {
            r.passed = false;
            r.detail = "gadget shape wrong at n=" + std::to_string(n);
            return r;
        }
        // every independent set, exhaustively
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            std::vector<int> I;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1) I.push_back(v);
            bool indep = true;
            for (size_t a = 0; a < I.size() && indep; ++a)
                for (size_t b = a + 1; b < I.size() && indep; ++b)
                    if (g.has_edge(I[a], I[b])) indep = false;
            if (!indep) continue;
            TwoRegularCertificate cert = embed_independent_set(map, I);
            auto check = is_two_regular_induced(map.target, cert.vertices);
            if (!check.ok() || cert.size() != 3 * static_cast<int>(I.size()) * n) {
                r.passed = false;
                r.detail = "embed failed at n=" + std::to_string(n);
                return r;
            }
            auto back = extract_independent_set(map, cert);
            if (!back.independent_set || *back.independent_set != I) {
                r.passed = false;
                r.detail = "extract round-trip failed at n=" + std::to_string(n);
                return r;
            }
            ++embeds;
        }
    }
    r.detail = std::to_string(embeds) + " independent sets embedded and recovered";
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& suite, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("fixtures")) out.push_back(fixtures_suite());
    if (want("oracle")) out.push_back(oracle_suite(seed));
    if (want("greedy")) out.push_back(greedy_suite(seed));
    if (want("clawfree")) out.push_back(clawfree_suite(seed));
    if (want("tightness")) out.push_back(tightness_suite());
    if (want("matching")) out.push_back(matching_suite(seed));
    if (want("reduction")) out.push_back(reduction_suite(seed));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << ' ' << r.name << "  " << r.detail << '\n';
        all = all && r.passed;
    }
    return all;
}

} // namespace cind
