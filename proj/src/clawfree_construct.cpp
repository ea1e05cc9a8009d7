#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "cind/blocks.hpp"
#include "cind/clawfree.hpp"
#include "cind/matching.hpp"

namespace cind {

using Color = ContractionH::Color;

int ContractionH::g_order_of_part(int hv) const { return tower_of[hv] >= 0 ? 10 : 3; }

int ContractionH::g_endpoint_in_part(int h_edge_id, int hv) const {
    const MEdge* e = graph.find_edge(h_edge_id);
    if (!e) throw std::logic_error("contraction: unknown H edge");
    if (e->u == hv) return edge_g[h_edge_id].first;
    if (e->v == hv) return edge_g[h_edge_id].second;
    throw std::logic_error("contraction: vertex not on edge");
}

ContractionH build_contraction(const Graph& g, UnitPartition partition, std::vector<Tower> towers) {
    size_t nu = partition.units.size();
    std::vector<int> unit_to_tower(nu, -1);
    for (size_t ti = 0; ti < towers.size(); ++ti)
        for (int u : {towers[ti].diamond_unit, towers[ti].middle_unit, towers[ti].base_unit}) {
            if (unit_to_tower[u] != -1)
                throw std::logic_error("contraction: towers are not vertex-disjoint");
            unit_to_tower[u] = static_cast<int>(ti);
        }
    for (size_t ui = 0; ui < nu; ++ui)
        if (partition.units[ui].kind == UnitPartition::Unit::Kind::diamond && unit_to_tower[ui] < 0)
            throw std::logic_error("contraction: diamond unit outside every tower");

    // parts, ordered by smallest contained G vertex
    struct Part {
        int min_vertex;
        int tower = -1; // or
        int unit = -1;
    };
    std::vector<Part> parts;
    for (size_t ti = 0; ti < towers.size(); ++ti)
        parts.push_back({towers[ti].vertices.front(), static_cast<int>(ti), -1});
    for (size_t ui = 0; ui < nu; ++ui)
        if (unit_to_tower[ui] < 0)
            parts.push_back({partition.units[ui].vertices.front(), -1, static_cast<int>(ui)});
    std::sort(parts.begin(), parts.end(),
              [](const Part& a, const Part& b) { return a.min_vertex < b.min_vertex; });

    std::vector<int> part_of_vertex(g.order(), -1);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        if (parts[pi].tower >= 0)
            for (int v : towers[parts[pi].tower].vertices) part_of_vertex[v] = static_cast<int>(pi);
        else
            for (int v : partition.units[parts[pi].unit].vertices)
                part_of_vertex[v] = static_cast<int>(pi);
    }

    ContractionH h;
    h.towers = std::move(towers);
    h.partition = std::move(partition);
    h.tower_of.assign(parts.size(), -1);
    h.unit_of.assign(parts.size(), -1);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        h.tower_of[pi] = parts[pi].tower;
        h.unit_of[pi] = parts[pi].unit;
    }

    std::vector<MEdge> hedges;
    for (auto [u, v] : g.edge_list()) {
        int pu = part_of_vertex[u], pv = part_of_vertex[v];
        if (pu == pv) continue;
        int id = static_cast<int>(hedges.size());
        hedges.push_back({id, pu, pv});
        h.edge_g.emplace_back(u, v);
    }
    h.graph = Multigraph::with_ids(static_cast<int>(parts.size()), std::move(hedges));

    // degree checks and colors
    h.color.assign(parts.size(), Color::uncolored);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        int deg = h.graph.degree(static_cast<int>(pi));
        if (h.tower_of[pi] >= 0) {
            if (deg != 2) throw std::logic_error("contraction: tower part of degree != 2");
            h.color[pi] = Color::red;
        } else if (deg != 3) {
            throw std::logic_error("contraction: triangle part of degree != 3");
        }
    }
    auto dec = biconnected_decomposition(h.graph);
    for (int bridge : dec.bridges) {
        const MEdge* e = h.graph.find_edge(bridge);
        for (int v : {e->u, e->v})
            if (h.color[v] == Color::uncolored) h.color[v] = Color::yellow;
    }
    return h;
}

std::vector<int> lift_cycle(const ContractionH& h, const Graph& g,
                            const std::vector<int>& hverts, const std::vector<int>& hedges) {
    size_t r = hverts.size();
    if (r < 2 || hedges.size() != r) throw std::logic_error("lift: malformed cycle");
    std::vector<int> out;
    out.reserve(2 * r);
    for (size_t i = 0; i < r; ++i) {
        int part = hverts[i];
        int entry = h.g_endpoint_in_part(hedges[(i + r - 1) % r], part);
        int exit = h.g_endpoint_in_part(hedges[i], part);
        if (entry == exit) throw std::logic_error("lift: cycle enters and leaves at one vertex");
        if (h.tower_of[part] >= 0) {
            const Tower& t = h.towers[h.tower_of[part]];
            bool ok = (entry == t.t0 && exit == t.t1) || (entry == t.t1 && exit == t.t0);
            if (!ok) throw std::logic_error("lift: tower crossing must use both base attachments");
        }
        if (!g.has_edge(entry, exit)) throw std::logic_error("lift: unit vertices not adjacent");
        out.push_back(entry);
        out.push_back(exit);
    }
    // the lift must be an induced cycle
    size_t len = out.size();
    std::set<int> distinct(out.begin(), out.end());
    if (distinct.size() != len) throw std::logic_error("lift: repeated vertex");
    for (size_t i = 0; i < len; ++i) {
        if (!g.has_edge(out[i], out[(i + 1) % len]))
            throw std::logic_error("lift: consecutive vertices not adjacent");
        for (size_t j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (g.has_edge(out[i], out[j])) throw std::logic_error("lift: chord in lifted cycle");
        }
    }
    return out;
}

PieceDecomposition build_pieces(ContractionH h) {
    PieceDecomposition pd;
    pd.h = std::move(h);
    const ContractionH& H = pd.h;
    const Multigraph& HG = H.graph;
    int hn = HG.order();
    if (!HG.is_connected()) throw std::logic_error("pieces: H is disconnected");

    auto colored = [&](int v) { return H.color[v] != Color::uncolored; };
    auto dec = biconnected_decomposition(HG);

    // split blocks: bridges / cycle blocks / the B_i raw material
    std::vector<std::vector<int>> big_blocks, cycle_blocks;
    for (auto& blk : dec.blocks) {
        if (blk.size() == 1) continue;
        if (block_is_cycle(HG, blk)) cycle_blocks.push_back(blk);
        else big_blocks.push_back(blk);
    }
    auto blk_min_vertex = [&](const std::vector<int>& blk) {
        auto verts = BlockDecomposition::block_vertices(HG, blk);
        return verts.front();
    };
    std::sort(big_blocks.begin(), big_blocks.end(),
              [&](const auto& a, const auto& b) { return blk_min_vertex(a) < blk_min_vertex(b); });

    pd.cactus_of.assign(hn, -1);
    pd.path_block_of.assign(hn, -1);
    pd.path_index_of.assign(hn, -1);

    // ------------------------------------------------------------------ B_i
    for (size_t bi = 0; bi < big_blocks.size(); ++bi) {
        const auto& blk = big_blocks[bi];
        BlockPiece piece;
        std::vector<int> verts = BlockDecomposition::block_vertices(HG, blk);
        // incidence restricted to this block
        std::map<int, std::vector<int>> binc; // vertex -> block edge ids, ascending
        for (int id : blk) {
            const MEdge* e = HG.find_edge(id);
            binc[e->u].push_back(id);
            binc[e->v].push_back(id);
        }
        for (int v : verts) {
            size_t d = binc[v].size();
            if (colored(v) && d != 2)
                throw std::logic_error("pieces: colored block vertex of block degree != 2");
            if (!colored(v)) {
                if (d != 3) throw std::logic_error("pieces: uncolored vertex with edges outside one block");
                piece.h_uncolored.push_back(v);
            }
        }
        std::map<int, int> local; // H id -> local id
        for (size_t i = 0; i < piece.h_uncolored.size(); ++i) local[piece.h_uncolored[i]] = static_cast<int>(i);

        std::vector<std::pair<int, int>> bedges; // local pairs
        std::vector<BlockPiece::EdgeInfo> infos;
        std::set<int> path_seed_used; // first edge of an already-walked path
        for (int id : blk) {
            const MEdge* e = HG.find_edge(id);
            if (!colored(e->u) && !colored(e->v)) {
                BlockPiece::EdgeInfo info;
                info.colored = false;
                info.h_edge = id;
                bedges.emplace_back(local[e->u], local[e->v]);
                infos.push_back(info);
            }
        }
        // colored paths: walk from each (uncolored endpoint, entering edge)
        for (int u : piece.h_uncolored) {
            for (int id : binc[u]) {
                const MEdge* e = HG.find_edge(id);
                int w = e->u == u ? e->v : e->u;
                if (!colored(w)) continue;
                if (path_seed_used.count(id)) continue;
                BlockPiece::ColoredPath path;
                path.h_edges.push_back(id);
                int prev_edge = id, cur = w;
                while (colored(cur)) {
                    path.interior.push_back(cur);
                    int next_edge = -1;
                    for (int eid : binc[cur])
                        if (eid != prev_edge) next_edge = eid;
                    if (next_edge < 0) throw std::logic_error("pieces: broken colored path");
                    const MEdge* ne = HG.find_edge(next_edge);
                    cur = ne->u == cur ? ne->v : ne->u;
                    path.h_edges.push_back(next_edge);
                    prev_edge = next_edge;
                }
                path.hu = u;
                path.hv = cur;
                if (path.hu == path.hv) throw std::logic_error("pieces: colored path loop");
                path_seed_used.insert(path.h_edges.front());
                path_seed_used.insert(path.h_edges.back());
                if (path.hu > path.hv) {
                    std::swap(path.hu, path.hv);
                    std::reverse(path.interior.begin(), path.interior.end());
                    std::reverse(path.h_edges.begin(), path.h_edges.end());
                }
                piece.paths.push_back(std::move(path));
            }
        }
        std::sort(piece.paths.begin(), piece.paths.end(),
                  [](const auto& a, const auto& b) { return a.interior.front() < b.interior.front(); });
        for (size_t pi = 0; pi < piece.paths.size(); ++pi) {
            auto& path = piece.paths[pi];
            path.b_edge = static_cast<int>(bedges.size());
            BlockPiece::EdgeInfo info;
            info.colored = true;
            info.path = static_cast<int>(pi);
            bedges.emplace_back(local[path.hu], local[path.hv]);
            infos.push_back(info);
            for (int w : path.interior) {
                if (pd.path_block_of[w] != -1)
                    throw std::logic_error("pieces: colored vertex on two block paths");
                pd.path_block_of[w] = static_cast<int>(bi);
                pd.path_index_of[w] = static_cast<int>(pi);
            }
        }
        piece.B = Multigraph(static_cast<int>(piece.h_uncolored.size()), bedges);
        piece.edge_info = std::move(infos);
        if (!piece.B.is_cubic()) throw std::logic_error("pieces: B_i is not cubic");
        auto bdec = biconnected_decomposition(piece.B);
        if (bdec.blocks.size() != 1 || !bdec.cut_vertices.empty())
            throw std::logic_error("pieces: B_i is not 2-connected");
        pd.blocks.push_back(std::move(piece));
    }

    // ------------------------------------------------------------------ cacti
    std::vector<std::vector<int>> colored_adj(hn); // colored-colored H edges
    for (const auto& e : HG.edges())
        if (colored(e.u) && colored(e.v)) {
            colored_adj[e.u].push_back(e.v);
            colored_adj[e.v].push_back(e.u);
        }
    for (int v = 0; v < hn; ++v) {
        if (!colored(v) || pd.cactus_of[v] != -1) continue;
        int ci = static_cast<int>(pd.cacti.size());
        CactusPiece piece;
        std::vector<int> stack{v};
        pd.cactus_of[v] = ci;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            piece.hverts.push_back(u);
            for (int w : colored_adj[u])
                if (pd.cactus_of[w] == -1) {
                    pd.cactus_of[w] = ci;
                    stack.push_back(w);
                }
        }
        std::sort(piece.hverts.begin(), piece.hverts.end());
        pd.cacti.push_back(std::move(piece));
    }
    // attach cactus cycles (= cycle blocks of H, which are all-colored)
    std::sort(cycle_blocks.begin(), cycle_blocks.end(),
              [&](const auto& a, const auto& b) { return blk_min_vertex(a) < blk_min_vertex(b); });
    for (const auto& blk : cycle_blocks) {
        auto verts = BlockDecomposition::block_vertices(HG, blk);
        for (int v : verts)
            if (!colored(v)) throw std::logic_error("pieces: cycle block with an uncolored vertex");
        int ci = pd.cactus_of[verts.front()];
        // walk the cycle from its smallest vertex along the smaller edge id
        std::map<int, std::vector<int>> cinc;
        for (int id : blk) {
            const MEdge* e = HG.find_edge(id);
            cinc[e->u].push_back(id);
            cinc[e->v].push_back(id);
        }
        std::vector<int> cyc_v, cyc_e;
        int start = verts.front(), cur = start, prev_edge = -1;
        do {
            cyc_v.push_back(cur);
            int next_edge = -1;
            for (int eid : cinc[cur])
                if (eid != prev_edge && (next_edge == -1)) next_edge = eid;
            cyc_e.push_back(next_edge);
            const MEdge* ne = HG.find_edge(next_edge);
            cur = ne->u == cur ? ne->v : ne->u;
            prev_edge = next_edge;
        } while (cur != start);
        if (cyc_v.size() != verts.size()) throw std::logic_error("pieces: bad cycle walk");
        auto& piece = pd.cacti[ci];
        piece.cycle_verts.push_back(std::move(cyc_v));
        piece.cycle_edges.push_back(std::move(cyc_e));
    }
    for (auto& piece : pd.cacti) {
        piece.on_cycle.assign(piece.hverts.size(), 0);
        for (const auto& cyc : piece.cycle_verts)
            for (int v : cyc) {
                auto it = std::lower_bound(piece.hverts.begin(), piece.hverts.end(), v);
                piece.on_cycle[it - piece.hverts.begin()] = 1;
            }
    }
    // every colored path's interior lives inside one cactus
    for (auto& bp : pd.blocks)
        for (auto& path : bp.paths) {
            path.cactus = pd.cactus_of[path.interior.front()];
            for (int w : path.interior)
                if (pd.cactus_of[w] != path.cactus)
                    throw std::logic_error("pieces: colored path spans two cacti");
        }

    // ------------------------------------------------------------------ tree
    size_t k = pd.blocks.size(), l = pd.cacti.size();
    pd.tree.clear();
    for (size_t i = 0; i < k; ++i)
        pd.tree.push_back({true, static_cast<int>(i), -1, 0, {}});
    for (size_t j = 0; j < l; ++j)
        pd.tree.push_back({false, static_cast<int>(j), -1, 0, {}});
    if (k == 0) {
        if (l != 1) throw std::logic_error("pieces: blockless H must be a single cactus");
        return pd;
    }
    std::set<std::pair<int, int>> tedges;
    for (size_t bi = 0; bi < k; ++bi)
        for (auto& path : pd.blocks[bi].paths) {
            auto key = std::make_pair(static_cast<int>(bi), static_cast<int>(k) + path.cactus);
            if (tedges.count(key))
                throw std::logic_error("pieces: block meets one cactus along two paths");
            tedges.insert(key);
        }
    if (tedges.size() != k + l - 1) throw std::logic_error("pieces: piece graph is not a tree");
    std::vector<std::vector<int>> tadj(k + l);
    for (auto [x, y] : tedges) {
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    std::vector<int> order{0};
    std::vector<char> seen(k + l, 0);
    seen[0] = 1;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int u = order[qi];
        std::sort(tadj[u].begin(), tadj[u].end());
        for (int w : tadj[u])
            if (!seen[w]) {
                seen[w] = 1;
                pd.tree[w].parent = u;
                pd.tree[w].level = pd.tree[u].level + 1;
                pd.tree[u].children.push_back(w);
                order.push_back(w);
            }
    }
    if (order.size() != k + l) throw std::logic_error("pieces: piece tree is disconnected");
    return pd;
}

// ---------------------------------------------------------------------------
// the level-order construction over the piece tree
// ---------------------------------------------------------------------------

namespace {

struct Builder {
    const Graph& g;
    PieceDecomposition& pd;
    ClawfreeReport* report;

    std::vector<std::vector<int>> cycles;
    std::vector<char> used;

    std::vector<std::optional<Matching>> matchings;
    std::vector<std::vector<char>> through; // per block, per path
    std::vector<std::optional<std::pair<int, bool>>> constraint; // (b_edge, contain)

    Builder(const Graph& graph, PieceDecomposition& dec, ClawfreeReport* rep)
        : g(graph), pd(dec), report(rep), used(graph.order(), 0),
          matchings(dec.blocks.size()), through(dec.blocks.size()),
          constraint(dec.blocks.size()) {}

    void add_cycle(std::vector<int> cyc) {
        for (int v : cyc) {
            if (used[v]) throw std::logic_error("construction: vertex used twice");
            used[v] = 1;
        }
        cycles.push_back(std::move(cyc));
    }

    void run() {
        if (pd.blocks.empty()) {
            process_cactus(0, -1);
            return;
        }
        for (int node : bfs_order()) {
            const auto& tn = pd.tree[node];
            if (tn.is_block) process_block(tn.index, node != 0);
            else process_cactus(tn.index, pd.tree[tn.parent].index);
        }
    }

    std::vector<int> bfs_order() const {
        std::vector<int> order{0};
        for (size_t i = 0; i < order.size(); ++i)
            for (int c : pd.tree[order[i]].children) order.push_back(c);
        return order;
    }

    void process_block(int bi, bool expect_constraint) {
        auto& bp = pd.blocks[bi];
        Matching m;
        if (!constraint[bi]) {
            if (expect_constraint) throw std::logic_error("block: missing parent constraint");
            m = maximum_matching(bp.B);
            if (!is_perfect_matching(bp.B, m))
                throw std::logic_error("block: root block has no perfect matching");
        } else {
            auto [eid, contain] = *constraint[bi];
            auto om = contain ? perfect_matching_containing(bp.B, eid)
                              : perfect_matching_avoiding(bp.B, eid);
            if (!om || !is_perfect_matching(bp.B, *om))
                throw std::logic_error("block: constrained perfect matching does not exist");
            m = *om;
        }
        matchings[bi] = m;
        std::vector<char> matched(bp.B.size(), 0);
        for (int id : m.edge_ids) matched[id] = 1;
        through[bi].assign(bp.paths.size(), 0);
        for (size_t pi = 0; pi < bp.paths.size(); ++pi)
            through[bi][pi] = !matched[bp.paths[pi].b_edge];

        // B - M is a disjoint union of cycles covering V(B)
        std::vector<char> edge_done(bp.B.size(), 0);
        for (int v0 = 0; v0 < bp.B.order(); ++v0) {
            // unmatched incident edges, ascending
            auto unmatched_at = [&](int v) {
                std::vector<int> ids;
                for (int idx : bp.B.incident(v)) {
                    const MEdge& e = bp.B.edge_at(idx);
                    if (!matched[e.id]) ids.push_back(e.id);
                }
                return ids;
            };
            auto start_ids = unmatched_at(v0);
            if (start_ids.size() != 2) throw std::logic_error("block: B - M is not 2-regular");
            if (edge_done[start_ids[0]]) continue;
            std::vector<int> cv, ce;
            int cur = v0, prev = -1;
            do {
                cv.push_back(cur);
                int next_edge = -1;
                for (int id : unmatched_at(cur))
                    if (id != prev && next_edge == -1 && !edge_done[id]) next_edge = id;
                if (next_edge == -1) throw std::logic_error("block: cycle walk failed");
                ce.push_back(next_edge);
                edge_done[next_edge] = 1;
                const MEdge* e = bp.B.find_edge(next_edge);
                cur = e->u == cur ? e->v : e->u;
                prev = next_edge;
            } while (cur != v0);
            lift_block_cycle(bi, cv, ce);
        }
        ++report->blocks_processed;
    }

    void lift_block_cycle(int bi, const std::vector<int>& bverts, const std::vector<int>& bedges) {
        auto& bp = pd.blocks[bi];
        std::vector<int> hv, he;
        for (size_t i = 0; i < bverts.size(); ++i) {
            int h_u = bp.h_uncolored[bverts[i]];
            hv.push_back(h_u);
            const auto& info = bp.edge_info[bedges[i]];
            if (!info.colored) {
                he.push_back(info.h_edge);
                continue;
            }
            const auto& path = bp.paths[info.path];
            if (path.hu == h_u) {
                for (size_t j = 0; j < path.h_edges.size(); ++j) {
                    he.push_back(path.h_edges[j]);
                    if (j < path.interior.size()) hv.push_back(path.interior[j]);
                }
            } else if (path.hv == h_u) {
                for (size_t j = path.h_edges.size(); j-- > 0;) {
                    he.push_back(path.h_edges[j]);
                    if (j > 0) hv.push_back(path.interior[j - 1]);
                }
            } else {
                throw std::logic_error("block: colored edge endpoints mismatch");
            }
        }
        add_cycle(lift_cycle(pd.h, g, hv, he));
    }

    void process_cactus(int ci, int parent_block) {
        auto& cp = pd.cacti[ci];
        const auto& H = pd.h;
        CactusLedger ledger;

        for (int hv : cp.hverts)
            if (H.color[hv] == Color::red)
                add_cycle(H.towers[H.tower_of[hv]].five_cycle());
        for (size_t k = 0; k < cp.cycle_verts.size(); ++k)
            add_cycle(lift_cycle(H, g, cp.cycle_verts[k], cp.cycle_edges[k]));

        // per-cycle yellow counts for the 5a / 5b split
        std::map<int, int> cycle_of; // hv -> cycle index
        std::vector<int> cycle_yellows(cp.cycle_verts.size(), 0);
        for (size_t k = 0; k < cp.cycle_verts.size(); ++k)
            for (int v : cp.cycle_verts[k]) {
                cycle_of[v] = static_cast<int>(k);
                if (H.color[v] == Color::yellow) ++cycle_yellows[k];
            }

        // classification
        enum class Kind { cycle, parent_kept, parent_through, child, pure };
        std::map<int, Kind> kind;
        std::map<int, std::pair<int, int>> child_group; // hv -> (block, path)
        for (size_t i = 0; i < cp.hverts.size(); ++i) {
            int hv = cp.hverts[i];
            if (cp.on_cycle[i]) {
                kind[hv] = Kind::cycle;
                continue;
            }
            int blk = pd.path_block_of[hv];
            if (blk == -1) {
                kind[hv] = Kind::pure;
            } else if (blk == parent_block) {
                bool thr = through[blk][pd.path_index_of[hv]];
                kind[hv] = thr ? Kind::parent_through : Kind::parent_kept;
            } else {
                kind[hv] = Kind::child;
                child_group[hv] = {blk, pd.path_index_of[hv]};
            }
        }

        // child paths: classify 6a / 6b / 6c and fix matching decisions
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (auto [hv, gp] : child_group) groups[gp].push_back(hv);
        std::map<int, std::string> child_case; // hv -> case label
        std::set<int> deferred;                // 6c vertices
        for (auto& [gp, members] : groups) {
            int yellows = 0;
            for (int hv : members)
                if (H.color[hv] == Color::yellow) ++yellows;
            if (yellows == 0)
                throw std::logic_error("cactus: child path without a yellow vertex");
            auto [blk, pi] = gp;
            int b_edge = pd.blocks[blk].paths[pi].b_edge;
            if (members.size() == 1) {
                child_case[members[0]] = "6c";
                deferred.insert(members[0]); // decided with the independent-set choice
            } else {
                std::string label = yellows >= 2 ? "6a" : "6b";
                for (int hv : members) child_case[hv] = label;
                set_constraint(blk, b_edge, false);
            }
        }

        // two-color the forest of non-cycle vertices
        std::map<int, int> side; // hv -> 1 or 2
        for (size_t i = 0; i < cp.hverts.size(); ++i) {
            int hv = cp.hverts[i];
            if (cp.on_cycle[i] || side.count(hv)) continue;
            std::vector<int> stack{hv};
            side[hv] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int idx : H.graph.incident(u)) {
                    const MEdge& e = H.graph.edge_at(idx);
                    int w = e.u == u ? e.v : e.u;
                    if (H.color[w] == Color::uncolored || side.count(w)) continue;
                    if (pd.cactus_of[w] != ci) continue;
                    if (cycle_of.count(w)) continue;
                    side[w] = 3 - side[u];
                    stack.push_back(w);
                }
            }
        }

        // membership helpers
        auto kept = [&](int hv) {
            Kind k = kind[hv];
            if (k == Kind::pure || k == Kind::parent_kept) return true;
            if (k == Kind::child && deferred.count(hv)) return true;
            return false;
        };

        // score both independent sets: a kept vertex contributes 3 when its
        // side is chosen; a deferred single-yellow path still yields 2 via the
        // child's through-cycle when the other side is chosen
        int score[3] = {0, 0, 0};
        for (int p = 1; p <= 2; ++p)
            for (int hv : cp.hverts) {
                if (!kept(hv)) continue;
                if (side[hv] == p) score[p] += 3;
                else if (deferred.count(hv)) score[p] += 2;
            }
        int chosen = score[1] >= score[2] ? 1 : 2;

        // commit triangles, deferred matching decisions, ledger entries
        int contribution = 0, n_of_h = 0;
        Rational avg_total(0);
        for (int hv : cp.hverts) {
            bool red = H.color[hv] == Color::red;
            n_of_h += red ? 10 : 3;
            std::string label;
            Rational a(0);
            int contrib = 0;
            switch (kind[hv]) {
            case Kind::cycle:
                label = cycle_yellows[cycle_of[hv]] == 1 ? "5a" : "5b";
                a = red ? Rational(1, 2) : Rational(1, 20);
                contrib = red ? 7 : 2;
                break;
            case Kind::parent_through:
                label = red ? "2" : "1";
                a = red ? Rational(1, 2) : Rational(1, 20);
                contrib = red ? 7 : 2;
                break;
            case Kind::parent_kept:
            case Kind::pure: {
                label = kind[hv] == Kind::pure ? (red ? "4" : "3") : (red ? "2" : "1");
                a = red ? Rational(0) : Rational(-9, 20);
                bool take = side[hv] == chosen;
                contrib = (red ? 5 : 0) + (take ? 3 : 0);
                if (take) {
                    if (red) add_cycle(H.towers[H.tower_of[hv]].base_triangle());
                    else add_cycle(H.partition.units[H.unit_of[hv]].vertices);
                }
                break;
            }
            case Kind::child: {
                label = child_case[hv];
                if (label == "6c") {
                    a = Rational(11, 20);
                    bool take = side[hv] == chosen;
                    contrib = take ? 3 : 2;
                    auto [blk, pi] = child_group[hv];
                    set_constraint(blk, pd.blocks[blk].paths[pi].b_edge, take);
                    if (take) add_cycle(H.partition.units[H.unit_of[hv]].vertices);
                } else {
                    a = red ? Rational(1, 2) : Rational(1, 20);
                    contrib = red ? 7 : 2;
                }
                break;
            }
            }
            contribution += contrib;
            avg_total = avg_total + a;
            ledger.entries.push_back({hv, label, a});
        }
        ledger.avg_total = avg_total;
        ledger.chosen = chosen;
        ledger.contribution = contribution;
        ledger.n_of_h = n_of_h;
        ledger.chosen_total = Rational(20LL * contribution - 13LL * n_of_h, 20);
        bool any_yellow = false;
        for (int hv : cp.hverts)
            if (H.color[hv] == Color::yellow) any_yellow = true;
        ledger.red_leaf_path = !any_yellow && cp.cycle_verts.empty();
        if (ledger.avg_total < Rational(0))
            throw std::logic_error("cactus: averaged ledger total negative");
        if (ledger.chosen_total < Rational(0))
            throw std::logic_error("cactus: chosen contribution below 13/20");
        report->ledgers.push_back(std::move(ledger));
        ++report->cacti_processed;
    }

    void set_constraint(int blk, int b_edge, bool contain) {
        if (constraint[blk])
            throw std::logic_error("cactus: block constrained twice");
        constraint[blk] = std::make_pair(b_edge, contain);
    }
};

TwoRegularCertificate main_construction(const Graph& g, ClawfreeReport* report) {
    ++report->main_constructions;
    UnitPartition p = triangle_diamond_partition(g);
    std::vector<Tower> towers = find_towers(g, p);
    ContractionH h = build_contraction(g, std::move(p), std::move(towers));
    PieceDecomposition pd = build_pieces(std::move(h));
    Builder b(g, pd, report);
    b.run();

    std::vector<int> verts;
    for (const auto& c : b.cycles) verts.insert(verts.end(), c.begin(), c.end());
    auto check = is_two_regular_induced(g, verts);
    if (!check.ok())
        throw std::logic_error("construction: assembled set is not induced 2-regular at vertex " +
                               std::to_string(check.offending_vertex));
    if (20LL * check.certificate->size() <= 13LL * g.order())
        throw std::logic_error("construction: did not exceed 13n/20");
    return *check.certificate;
}

TwoRegularCertificate solve_component(const Graph& g0, ClawfreeReport* report) {
    std::vector<SurgeryRecord> records;
    Graph g = g0;
    TwoRegularCertificate cert;
    for (;;) {
        ReduceOutcome out = reduce_step(g);
        if (out.kind == ReduceOutcome::Kind::terminal) {
            cert = std::move(out.certificate);
            if (out.terminal_name == "k4") ++report->terminal_k4;
            else if (out.terminal_name == "prism") ++report->terminal_prism;
            else if (out.terminal_name == "necklace") ++report->terminal_necklace;
            else if (out.terminal_name == "fig2") ++report->terminal_fig2;
            else if (out.terminal_name == "fig3") ++report->terminal_fig3;
            break;
        }
        if (out.kind == ReduceOutcome::Kind::surgery) {
            switch (out.record.kind) {
            case SurgeryRecord::Kind::bridging_diamond: ++report->surgeries_towersiamond; break;
            case SurgeryRecord::Kind::twin_triangles: ++report->surgeries_triangles; break;
            case SurgeryRecord::Kind::tower_pair: ++report->surgeries_towers; break;
            }
            records.push_back(std::move(out.record));
            g = std::move(out.reduced);
            continue;
        }
        cert = main_construction(g, report);
        break;
    }
    for (auto it = records.rbegin(); it != records.rend(); ++it) cert = apply_expansion(*it, cert);
    return cert;
}

} // namespace

TwoRegularCertificate construct_large_two_regular(const Graph& g, ClawfreeReport* report) {
    if (!is_cubic(g)) throw std::invalid_argument("clawfree: graph is not cubic");
    if (!is_claw_free(g)) throw std::invalid_argument("clawfree: graph is not claw-free");
    ClawfreeReport local;
    if (!report) report = &local;

    std::vector<std::vector<int>> all_cycles;
    for (const auto& comp : connected_components(g)) {
        ++report->components;
        std::vector<int> old_id;
        Graph sub = g.induced_subgraph(comp, &old_id);
        TwoRegularCertificate cert = solve_component(sub, report);
        long long threshold = 13LL * sub.order() / 20 + 1;
        if (cert.size() < threshold)
            throw std::logic_error("clawfree: certificate below floor(13n/20)+1 on a component");
        for (auto& c : cert.cycles) {
            for (int& v : c) v = old_id[v];
            all_cycles.push_back(std::move(c));
        }
    }
    TwoRegularCertificate cert = make_certificate(std::move(all_cycles));
    auto check = is_two_regular_induced(g, cert.vertices);
    if (!check.ok()) throw std::logic_error("clawfree: final certificate invalid");
    return *check.certificate;
}

} // namespace cind
