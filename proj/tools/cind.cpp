// cind: compute and certify induced 2-regular subgraphs.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cind/bench.hpp"
#include "cind/clawfree.hpp"
#include "cind/exact.hpp"
#include "cind/families.hpp"
#include "cind/graph_io.hpp"
#include "cind/greedy.hpp"
#include "cind/hardness.hpp"

using nlohmann::json;

namespace {

cind::Graph read_input(const std::string& path) {
    if (path == "-") {
        std::string content((std::istreambuf_iterator<char>(std::cin)),
                            std::istreambuf_iterator<char>());
        if (!content.empty() && std::isdigit(static_cast<unsigned char>(content[0])))
            return cind::parse_edgelist(content);
        return cind::parse_graph6(content);
    }
    return cind::load_graph_file(path);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CIND_SEED")) return std::strtoull(env, nullptr, 10);
    return 12345;
}

json cycles_json(const cind::TwoRegularCertificate& cert) {
    json cycles = json::array();
    for (const auto& c : cert.cycles) cycles.push_back(c);
    return cycles;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compute and certify induced 2-regular subgraphs"};
    app.require_subcommand(1);

    std::string family, format = "graph6", file, set_text, suite = "all", map_path;
    std::vector<long long> params;
    std::uint64_t seed = default_seed();
    long long node_limit = -1;
    double time_limit = -1;

    auto* gen = app.add_subcommand("gen", "emit a named graph family");
    gen->add_option("family", family,
                    "necklace K | tightness K | kbip K | random T D | k4 | prism | fig2 | fig3 | "
                    "fig5 | tower")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--format", format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_option("--seed", seed, "generator seed");

    auto* exact = app.add_subcommand("exact", "exact induced cycle number with certificate");
    exact->add_option("file", file, "graph file (.g6/.el, - for stdin)")->required();
    exact->add_option("--nodes", node_limit, "search node limit");
    exact->add_option("--time", time_limit, "time limit in seconds");

    auto* greedy = app.add_subcommand("greedy", "greedy certificate and certified lower bound");
    greedy->add_option("file", file)->required();

    auto* clawfree = app.add_subcommand("clawfree", "constructive > 13n/20 set for claw-free cubic");
    clawfree->add_option("file", file)->required();

    auto* reduce = app.add_subcommand("reduce", "independent-set gadget reduction");
    reduce->add_option("file", file)->required();
    reduce->add_option("--map", map_path, "path for the C_v map sidecar (default FILE.cv.json)");

    auto* verify = app.add_subcommand("verify", "check that a vertex set is induced 2-regular");
    verify->add_option("file", file)->required();
    verify->add_option("--set", set_text, "comma-separated vertex ids")->required();

    auto* bench = app.add_subcommand("bench", "run the verification suites");
    bench->add_option("--suite", suite,
                      "fixtures|oracle|greedy|clawfree|tightness|matching|reduction|all");
    bench->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            cind::Graph g;
            if (family == "necklace") {
                if (params.size() != 1) throw std::invalid_argument("gen necklace K");
                g = cind::diamond_necklace(static_cast<int>(params[0])).first;
            } else if (family == "tightness") {
                if (params.size() != 1) throw std::invalid_argument("gen tightness K");
                g = cind::tightness_graph(static_cast<int>(params[0]));
            } else if (family == "kbip") {
                if (params.size() != 1) throw std::invalid_argument("gen kbip K");
                g = cind::complete_bipartite(static_cast<int>(params[0]));
            } else if (family == "random") {
                if (params.size() != 2) throw std::invalid_argument("gen random T D");
                g = cind::random_clawfree_cubic(static_cast<int>(params[0]),
                                                static_cast<int>(params[1]), seed);
            } else {
                g = cind::fixture(family);
            }
            std::cout << (format == "graph6" ? cind::emit_graph6(g) : cind::emit_edgelist(g));
            if (format == "graph6") std::cout << '\n';
            return 0;
        }

        if (*exact) {
            cind::Graph g = read_input(file);
            cind::SearchBudget budget;
            if (node_limit >= 0) budget.node_limit = node_limit;
            if (time_limit >= 0) budget.time_limit_seconds = time_limit;
            auto t0 = std::chrono::steady_clock::now();
            cind::ExactResult res = cind::max_induced_two_regular(g, budget);
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
            json out{{"size", res.certificate.size()},
                     {"optimal", res.optimal},
                     {"cycles", cycles_json(res.certificate)},
                     {"nodes", res.nodes_explored}};
            std::cout << out.dump() << '\n';
            std::cerr << "exact: n=" << g.order() << " finished in " << ms.count() << " ms\n";
            return 0;
        }

        if (*greedy) {
            cind::Graph g = read_input(file);
            auto [cert, trace] = cind::greedy_two_regular(g);
            json out{{"size", cert.size()}, {"cycles", cycles_json(cert)}};
            if (cind::max_degree(g) >= 3) {
                cind::Rational bound = cind::general_bound(g.order(), g.size(), cind::max_degree(g));
                out["bound_numerator"] = bound.num();
                out["bound_denominator"] = bound.den();
            } else {
                out["bound_numerator"] = nullptr;
                out["bound_denominator"] = nullptr;
            }
            std::cout << out.dump() << '\n';
            return 0;
        }

        if (*clawfree) {
            cind::Graph g = read_input(file);
            cind::ClawfreeReport report;
            auto t0 = std::chrono::steady_clock::now();
            cind::TwoRegularCertificate cert = cind::construct_large_two_regular(g, &report);
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
            json out{{"size", cert.size()},
                     {"threshold", 13LL * g.order() / 20 + 1},
                     {"cycles", cycles_json(cert)},
                     {"surgeries_applied", report.surgeries()},
                     {"pieces", report.pieces()}};
            std::cout << out.dump() << '\n';
            std::cerr << "clawfree: n=" << g.order() << " finished in " << ms.count() << " ms\n";
            return 0;
        }

        if (*reduce) {
            cind::Graph g = read_input(file);
            cind::ReductionMap map = cind::reduce_independent_set(g);
            std::cout << cind::emit_graph6(map.target) << '\n';
            json side{{"n_source", map.source.order()}, {"n_target", map.target.order()}};
            json cyc = json::object();
            for (int v = 0; v < map.source.order(); ++v) cyc[std::to_string(v)] = map.cycles[v];
            side["cycles"] = cyc;
            std::string out_path = map_path.empty()
                                       ? (file == "-" ? std::string("cv.json") : file + ".cv.json")
                                       : map_path;
            std::ofstream sidecar(out_path);
            if (!sidecar) throw std::runtime_error("cannot write sidecar: " + out_path);
            sidecar << side.dump() << '\n';
            std::cerr << "wrote C_v map to " << out_path << '\n';
            return 0;
        }

        if (*verify) {
            cind::Graph g = read_input(file);
            std::vector<int> verts = parse_vertex_list(set_text);
            auto check = cind::is_two_regular_induced(g, verts);
            if (!check.ok()) {
                std::cerr << "not induced 2-regular: vertex " << check.offending_vertex << " has "
                          << check.offending_degree << " neighbors inside the set\n";
                return 1;
            }
            json out{{"ok", true},
                     {"size", check.certificate->size()},
                     {"cycles", cycles_json(*check.certificate)}};
            std::cout << out.dump() << '\n';
            return 0;
        }

        if (*bench) {
            auto results = cind::run_acceptance(suite, seed);
            bool ok = cind::print_acceptance(results, std::cout);
            std::cerr << (ok ? "all suites passed" : "suite failures present") << '\n';
            return ok ? 0 : 1;
        }
    } catch (const cind::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
