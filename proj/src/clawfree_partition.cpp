#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cind/clawfree.hpp"

namespace cind {

namespace {

void require_connected_cubic_clawfree(const Graph& g) {
    if (!is_cubic(g)) throw std::invalid_argument("clawfree: graph is not cubic");
    if (!is_claw_free(g)) throw std::invalid_argument("clawfree: graph is not claw-free");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("clawfree: graph is not connected");
}

} // namespace

int UnitPartition::triangle_count() const {
    int t = 0;
    for (const auto& u : units) t += u.kind == Unit::Kind::triangle;
    return t;
}

int UnitPartition::diamond_count() const {
    int d = 0;
    for (const auto& u : units) d += u.kind == Unit::Kind::diamond;
    return d;
}

UnitPartition triangle_diamond_partition(const Graph& g) {
    require_connected_cubic_clawfree(g);
    if (g.order() == 4)
        throw std::invalid_argument("clawfree: K4 admits no triangle-diamond partition");

    int n = g.order();
    UnitPartition p;
    p.unit_of.assign(n, -1);
    std::vector<UnitPartition::Unit> units;

    // diamonds: an edge cd with two common neighbors a, b is the inner edge
    // of a diamond unit (ab cannot be present: that would be a K4 component)
    for (int c = 0; c < n; ++c)
        for (int d : g.neighbors(c)) {
            if (d < c) continue;
            std::vector<int> common;
            for (int x : g.neighbors(c))
                if (x != d && g.has_edge(x, d)) common.push_back(x);
            if (common.size() != 2) continue;
            int a = common[0], b = common[1];
            if (g.has_edge(a, b))
                throw std::logic_error("partition: K4 block in a connected graph of order > 4");
            for (int v : {a, b, c, d})
                if (p.unit_of[v] != -1)
                    throw std::logic_error("partition: overlapping diamond units");
            UnitPartition::Unit u;
            u.kind = UnitPartition::Unit::Kind::diamond;
            u.vertices = {a, b, c, d};
            for (int v : u.vertices) p.unit_of[v] = static_cast<int>(units.size());
            units.push_back(std::move(u));
        }

    // the rest fall into triangles among unassigned vertices
    for (int v = 0; v < n; ++v) {
        if (p.unit_of[v] != -1) continue;
        auto nb = g.neighbors(v);
        int x = -1, y = -1, found = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (p.unit_of[nb[i]] == -1 && p.unit_of[nb[j]] == -1 &&
                    g.has_edge(nb[i], nb[j])) {
                    x = nb[i];
                    y = nb[j];
                    ++found;
                }
        if (found != 1)
            throw std::logic_error("partition: vertex " + std::to_string(v) +
                                   " has no unique triangle unit");
        UnitPartition::Unit u;
        u.kind = UnitPartition::Unit::Kind::triangle;
        u.vertices = {v, x, y};
        std::sort(u.vertices.begin(), u.vertices.end());
        for (int w : u.vertices) p.unit_of[w] = static_cast<int>(units.size());
        units.push_back(std::move(u));
    }

    // sort units by smallest vertex and remap
    std::vector<int> order(units.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto min_vertex = [&](int i) {
        return *std::min_element(units[i].vertices.begin(), units[i].vertices.end());
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) { return min_vertex(i) < min_vertex(j); });
    p.units.reserve(units.size());
    for (int i : order) p.units.push_back(std::move(units[i]));
    for (size_t i = 0; i < p.units.size(); ++i)
        for (int v : p.units[i].vertices) p.unit_of[v] = static_cast<int>(i);
    return p;
}

namespace {

// the unique neighbor of v outside its own unit; -1 if none (inner diamond vertex)
int outside_neighbor(const Graph& g, const UnitPartition& p, int v) {
    for (int w : g.neighbors(v))
        if (p.unit_of[w] != p.unit_of[v]) return w;
    return -1;
}

} // namespace

std::vector<int> Tower::five_cycle() const {
    return {a, std::min(c, d), b, m2, m1};
}

std::vector<int> Tower::alt_five_cycle() const {
    return {a, std::max(c, d), b, m2, m1};
}

std::vector<Tower> find_towers(const Graph& g, const UnitPartition& p) {
    std::vector<Tower> towers;
    for (size_t ui = 0; ui < p.units.size(); ++ui) {
        const auto& unit = p.units[ui];
        if (unit.kind != UnitPartition::Unit::Kind::diamond) continue;
        int a = unit.vertices[0], b = unit.vertices[1];
        int va = outside_neighbor(g, p, a), vb = outside_neighbor(g, p, b);
        if (p.unit_of[va] != p.unit_of[vb]) continue; // reducible state: no tower here yet
        int mi = p.unit_of[va];
        const auto& mid = p.units[mi];
        if (mid.kind != UnitPartition::Unit::Kind::triangle) continue;
        int m1 = va, m2 = vb, m0 = -1;
        for (int w : mid.vertices)
            if (w != m1 && w != m2) m0 = w;
        int t2 = outside_neighbor(g, p, m0);
        int bi = p.unit_of[t2];
        const auto& base = p.units[bi];
        if (base.kind != UnitPartition::Unit::Kind::triangle || bi == mi) continue;
        Tower t;
        t.diamond_unit = static_cast<int>(ui);
        t.middle_unit = mi;
        t.base_unit = bi;
        t.a = a;
        t.b = b;
        t.c = unit.vertices[2];
        t.d = unit.vertices[3];
        t.m0 = m0;
        t.m1 = m1;
        t.m2 = m2;
        t.t2 = t2;
        std::vector<int> rest;
        for (int w : base.vertices)
            if (w != t2) rest.push_back(w);
        t.t0 = std::min(rest[0], rest[1]);
        t.t1 = std::max(rest[0], rest[1]);
        t.vertices = {t.a, t.b, t.c, t.d, t.m0, t.m1, t.m2, t.t0, t.t1, t.t2};
        std::sort(t.vertices.begin(), t.vertices.end());
        towers.push_back(std::move(t));
    }
    return towers;
}

namespace {

// builds the child graph: delete `deleted`, add edge (v1, v2); fills the
// child_to_parent map and validates the child is connected cubic claw-free
Graph surgery_child(const Graph& g, const std::vector<int>& deleted, int v1, int v2,
                    std::vector<int>* child_to_parent) {
    std::vector<char> gone(g.order(), 0);
    for (int v : deleted) gone[v] = 1;
    std::vector<int> old_id;
    std::vector<int> new_id(g.order(), -1);
    for (int v = 0; v < g.order(); ++v)
        if (!gone[v]) {
            new_id[v] = static_cast<int>(old_id.size());
            old_id.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edge_list())
        if (!gone[u] && !gone[v]) edges.emplace_back(new_id[u], new_id[v]);
    edges.emplace_back(new_id[v1], new_id[v2]);
    Graph child = Graph::from_edges(static_cast<int>(old_id.size()), edges);
    require_connected_cubic_clawfree(child);
    *child_to_parent = std::move(old_id);
    return child;
}

TwoRegularCertificate verified_certificate(const Graph& g, const std::vector<int>& verts,
                                           const char* what) {
    auto check = is_two_regular_induced(g, verts);
    if (!check.ok())
        throw std::logic_error(std::string("clawfree: invalid certificate from ") + what +
                               " at vertex " + std::to_string(check.offending_vertex));
    return *check.certificate;
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

ReduceOutcome reduce_step(const Graph& g) {
    require_connected_cubic_clawfree(g);
    ReduceOutcome out;

    if (g.order() == 4) { // K4
        out.kind = ReduceOutcome::Kind::terminal;
        out.terminal_name = "k4";
        out.certificate = verified_certificate(g, {0, 1, 2}, "k4");
        return out;
    }

    UnitPartition p = triangle_diamond_partition(g);

    if (p.triangle_count() == 0) {
        // diamond-necklace: the diamonds form a cycle; per diamond take both
        // inner vertices plus the outer vertex on its outgoing link, so no
        // two chosen outer vertices are adjacent
        std::vector<int> verts;
        int k = p.diamond_count();
        int cur = 0;
        int exit_vertex = p.units[0].vertices[0]; // start through a of unit 0
        for (int step = 0; step < k; ++step) {
            const auto& u = p.units[cur];
            verts.insert(verts.end(), {exit_vertex, u.vertices[2], u.vertices[3]});
            int entry_next = outside_neighbor(g, p, exit_vertex);
            int next = p.unit_of[entry_next];
            const auto& nu = p.units[next];
            exit_vertex = nu.vertices[0] == entry_next ? nu.vertices[1] : nu.vertices[0];
            cur = next;
        }
        if (cur != 0 && k > 0)
            throw std::logic_error("necklace: diamond cycle walk did not close");
        out.kind = ReduceOutcome::Kind::terminal;
        out.terminal_name = "necklace";
        out.certificate = verified_certificate(g, verts, "necklace");
        return out;
    }

    // bridging diamond: its two outside edges reach two distinct units
    for (size_t ui = 0; ui < p.units.size(); ++ui) {
        const auto& unit = p.units[ui];
        if (unit.kind != UnitPartition::Unit::Kind::diamond) continue;
        int a = unit.vertices[0], b = unit.vertices[1];
        int v1 = outside_neighbor(g, p, a), v2 = outside_neighbor(g, p, b);
        if (p.unit_of[v1] == p.unit_of[v2]) continue;
        if (g.has_edge(v1, v2))
            throw std::logic_error("bridging diamond: surgery endpoints already adjacent");
        SurgeryRecord rec;
        rec.kind = SurgeryRecord::Kind::bridging_diamond;
        rec.parent = g;
        rec.deleted = unit.vertices;
        std::sort(rec.deleted.begin(), rec.deleted.end());
        rec.a = a;
        rec.b = b;
        rec.c = unit.vertices[2];
        rec.d = unit.vertices[3];
        rec.v1 = v1;
        rec.v2 = v2;
        out.kind = ReduceOutcome::Kind::surgery;
        out.reduced = surgery_child(g, rec.deleted, v1, v2, &rec.child_to_parent);
        out.record = std::move(rec);
        return out;
    }

    // unit adjacency with edge multiplicities
    size_t nu = p.units.size();
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> joins; // unit pair -> edges
    for (auto [u, v] : g.edge_list()) {
        int a = p.unit_of[u], b = p.unit_of[v];
        if (a == b) continue;
        std::pair<int, int> key = std::minmax(a, b);
        joins[{key.first, key.second}].emplace_back(u, v);
    }

    // triple-joined triangle units mean g is the prism
    for (const auto& [key, edges] : joins) {
        if (edges.size() != 3) continue;
        if (g.order() != 6)
            throw std::logic_error("prism: triple join in a graph of order != 6");
        // 4-cycle through two edges of the join
        auto [x1, y1] = edges[0];
        auto [x2, y2] = edges[1];
        if (p.unit_of[x1] != p.unit_of[x2]) std::swap(x2, y2);
        out.kind = ReduceOutcome::Kind::terminal;
        out.terminal_name = "prism";
        out.certificate = verified_certificate(g, {x1, y1, x2, y2}, "prism");
        return out;
    }

    // twin triangles: doubly joined, with no common adjacent unit
    std::vector<std::set<int>> unit_adj(nu);
    for (const auto& [key, edges] : joins) {
        unit_adj[key.first].insert(key.second);
        unit_adj[key.second].insert(key.first);
    }
    for (const auto& [key, edges] : joins) {
        if (edges.size() != 2) continue;
        auto [i, j] = key;
        if (p.units[i].kind != UnitPartition::Unit::Kind::triangle ||
            p.units[j].kind != UnitPartition::Unit::Kind::triangle)
            continue;
        bool common = false;
        for (int x : unit_adj[i])
            if (x != j && unit_adj[j].count(x)) common = true;
        if (common) continue;

        auto [w1, w2] = edges[0];
        auto [x1, x2] = edges[1];
        if (p.unit_of[w1] != i) std::swap(w1, w2);
        if (p.unit_of[x1] != i) std::swap(x1, x2);
        int u1 = -1, u2 = -1;
        for (int v : p.units[i].vertices)
            if (v != w1 && v != x1) u1 = v;
        for (int v : p.units[j].vertices)
            if (v != w2 && v != x2) u2 = v;
        int v1 = outside_neighbor(g, p, u1), v2 = outside_neighbor(g, p, u2);
        if (v1 == v2 || g.has_edge(v1, v2))
            throw std::logic_error("twin triangles: surgery endpoints invalid");
        SurgeryRecord rec;
        rec.kind = SurgeryRecord::Kind::twin_triangles;
        rec.parent = g;
        rec.deleted = concat({p.units[i].vertices, p.units[j].vertices});
        std::sort(rec.deleted.begin(), rec.deleted.end());
        rec.u1 = u1;
        rec.w1 = w1;
        rec.x1 = x1;
        rec.u2 = u2;
        rec.w2 = w2;
        rec.x2 = x2;
        rec.v1 = v1;
        rec.v2 = v2;
        out.kind = ReduceOutcome::Kind::surgery;
        out.reduced = surgery_child(g, rec.deleted, v1, v2, &rec.child_to_parent);
        out.record = std::move(rec);
        return out;
    }

    // tower overlaps
    std::vector<Tower> towers = find_towers(g, p);
    for (size_t i = 0; i < towers.size(); ++i)
        for (size_t j = i + 1; j < towers.size(); ++j) {
            if (towers[i].base_unit == towers[j].base_unit) continue;
            std::vector<int> shared;
            std::set_intersection(towers[i].vertices.begin(), towers[i].vertices.end(),
                                  towers[j].vertices.begin(), towers[j].vertices.end(),
                                  std::back_inserter(shared));
            if (shared.empty()) continue;
            // overlapping towers without a common base: the 14-vertex graph
            if (g.order() != 14)
                throw std::logic_error("towers: overlapping pair in a graph of order != 14");
            out.kind = ReduceOutcome::Kind::terminal;
            out.terminal_name = "fig2";
            out.certificate = verified_certificate(
                g, concat({towers[i].five_cycle(), towers[j].five_cycle()}), "fig2");
            return out;
        }

    std::map<int, std::vector<int>> by_base; // base unit -> tower indices
    for (size_t i = 0; i < towers.size(); ++i) by_base[towers[i].base_unit].push_back(static_cast<int>(i));

    for (const auto& [base, ts] : by_base) {
        if (ts.size() < 3) continue;
        // three towers on one base: the 24-vertex graph
        if (ts.size() != 3 || g.order() != 24)
            throw std::logic_error("towers: unexpected fan on one base");
        out.kind = ReduceOutcome::Kind::terminal;
        out.terminal_name = "fig3";
        out.certificate = verified_certificate(
            g,
            concat({towers[ts[0]].five_cycle(), towers[ts[1]].five_cycle(),
                    towers[ts[2]].five_cycle(), p.units[base].vertices}),
            "fig3");
        return out;
    }

    for (const auto& [base, ts] : by_base) {
        if (ts.size() != 2) continue;
        const Tower& g1 = towers[ts[0]];
        const Tower& g2 = towers[ts[1]];
        std::vector<int> both = g1.vertices;
        both.insert(both.end(), g2.vertices.begin(), g2.vertices.end());
        std::sort(both.begin(), both.end());
        both.erase(std::unique(both.begin(), both.end()), both.end());
        if (both.size() != 17) throw std::logic_error("tower pair: union of size != 17");
        // the base vertex whose outside neighbor survives
        int v = -1, r1 = -1;
        for (int t : p.units[base].vertices) {
            int w = outside_neighbor(g, p, t);
            if (!std::binary_search(both.begin(), both.end(), w)) {
                v = t;
                r1 = w;
            }
        }
        if (v < 0) throw std::logic_error("tower pair: no free base vertex");
        int tstar = p.unit_of[r1];
        if (p.units[tstar].kind != UnitPartition::Unit::Kind::triangle)
            throw std::logic_error("tower pair: outside neighbor not in a triangle unit");
        std::vector<int> rs;
        for (int w : p.units[tstar].vertices)
            if (w != r1) rs.push_back(w);
        int r2 = std::min(rs[0], rs[1]), r3 = std::max(rs[0], rs[1]);
        int s2 = outside_neighbor(g, p, r2), s3 = outside_neighbor(g, p, r3);
        if (p.unit_of[s2] == p.unit_of[s3] || g.has_edge(s2, s3))
            throw std::logic_error("tower pair: bridge endpoints structure violated");
        SurgeryRecord rec;
        rec.kind = SurgeryRecord::Kind::tower_pair;
        rec.parent = g;
        rec.deleted = concat({both, p.units[tstar].vertices});
        std::sort(rec.deleted.begin(), rec.deleted.end());
        if (rec.deleted.size() != 20) throw std::logic_error("tower pair: expected 20 deletions");
        rec.r2 = r2;
        rec.r3 = r3;
        rec.v1 = s2;
        rec.v2 = s3;
        rec.cycle1 = g1.five_cycle();
        rec.cycle2 = g2.five_cycle();
        rec.base_tri = p.units[base].vertices;
        out.kind = ReduceOutcome::Kind::surgery;
        out.reduced = surgery_child(g, rec.deleted, s2, s3, &rec.child_to_parent);
        out.record = std::move(rec);
        return out;
    }

    out.kind = ReduceOutcome::Kind::irreducible;
    return out;
}

TwoRegularCertificate apply_expansion(const SurgeryRecord& rec, const TwoRegularCertificate& child) {
    std::vector<int> verts;
    verts.reserve(child.vertices.size() + 15);
    for (int v : child.vertices) verts.push_back(rec.child_to_parent[v]);
    std::sort(verts.begin(), verts.end());
    bool both = std::binary_search(verts.begin(), verts.end(), rec.v1) &&
                std::binary_search(verts.begin(), verts.end(), rec.v2);

    std::vector<int> add;
    switch (rec.kind) {
    case SurgeryRecord::Kind::bridging_diamond:
        if (both) add = {rec.a, rec.b, rec.c};
        else if (!std::binary_search(verts.begin(), verts.end(), rec.v1))
            add = {rec.a, rec.c, rec.d};
        else
            add = {rec.b, rec.c, rec.d};
        break;
    case SurgeryRecord::Kind::twin_triangles:
        if (both) add = {rec.u1, rec.u2, rec.w1, rec.w2};
        else add = {rec.w1, rec.w2, rec.x1, rec.x2};
        break;
    case SurgeryRecord::Kind::tower_pair:
        add = concat({rec.cycle1, rec.cycle2, rec.base_tri});
        if (both) {
            add.push_back(rec.r2);
            add.push_back(rec.r3);
        }
        break;
    }
    verts.insert(verts.end(), add.begin(), add.end());

    auto cert = verified_certificate(rec.parent, verts, "expansion");
    int expected_gain = rec.kind == SurgeryRecord::Kind::bridging_diamond   ? 3
                        : rec.kind == SurgeryRecord::Kind::twin_triangles ? 4
                        : (both ? 15 : 13);
    if (cert.size() != child.size() + expected_gain)
        throw std::logic_error("expansion: wrong size increment");
    return cert;
}

} // namespace cind
