#pragma once

// Independent reference computations for the unit tests.  Nothing here calls
// the library's face tracing, rank or state-sum code: boundary components are
// traced on the plain signed rotation system, ranks use a local union-find,
// and the state sums are written out from their defining formulas.

#include "ribbon/coloured.hpp"
#include "ribbon/poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <string>
#include <vector>

namespace oracle {

using ribbon::EdgeId;
using ribbon::EdgeMask;
using ribbon::HalfEdge;
using ribbon::HalfPoly;
using ribbon::RibbonGraph;
using ribbon::RotationSystem;

inline RibbonGraph make(int m, std::vector<std::vector<HalfEdge>> vertices, std::set<EdgeId> twisted = {}) {
    return RibbonGraph(RotationSystem::with_edges(m, std::move(vertices), std::move(twisted)));
}

// The named small graphs; e = 1, f = 2.
inline RibbonGraph B1() { return make(1, {{{1, 1}}, {{1, 2}}}); }
inline RibbonGraph L1o() { return make(1, {{{1, 1}, {1, 2}}}); }
inline RibbonGraph L1n() { return make(1, {{{1, 1}, {1, 2}}}, {1}); }
inline RibbonGraph ThetaT() { return make(2, {{{1, 1}, {2, 1}, {1, 2}, {2, 2}}}); }
inline RibbonGraph Bq2() { return make(2, {{{1, 1}, {1, 2}, {2, 1}, {2, 2}}}); }
inline RibbonGraph point() { return make(0, {{}}); }

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// Rank of the edge set `pairs` on n vertices.
inline int rank(int n, const std::vector<std::pair<int, int>>& pairs) {
    UnionFind uf(n);
    int r = 0;
    for (auto [a, b] : pairs) r += uf.unite(a, b);
    return r;
}

// Face tracing on a signed rotation system.  A state is (half-edge, direction);
// one step crosses the edge (reversing direction on a twist) and then moves
// to the next half-edge in the current direction.  Each face appears as two
// reverse orbits; every isolated vertex adds one face.
struct Faces {
    int count = 0;
    std::vector<int> sizes; // side-flag count per flagged face, sorted
};

inline Faces trace_faces(const RotationSystem& rs, const std::set<EdgeId>& keep) {
    std::map<std::pair<EdgeId, int>, std::pair<int, int>> where; // half-edge -> (vertex, slot)
    std::vector<std::vector<HalfEdge>> rot;
    int isolated = 0;
    for (const auto& r : rs.vertices) {
        std::vector<HalfEdge> kept;
        for (HalfEdge h : r)
            if (keep.count(h.edge)) kept.push_back(h);
        if (kept.empty()) ++isolated;
        for (std::size_t i = 0; i < kept.size(); ++i)
            where[{kept[i].edge, kept[i].end}] = {static_cast<int>(rot.size()), static_cast<int>(i)};
        rot.push_back(kept);
    }
    auto step = [&](HalfEdge h, int d) {
        HalfEdge o{h.edge, 3 - h.end};
        if (rs.twisted.count(h.edge)) d = -d;
        auto [v, i] = where.at({o.edge, o.end});
        int n = static_cast<int>(rot[v].size());
        return std::pair<HalfEdge, int>{rot[v][((i + d) % n + n) % n], d};
    };
    std::set<std::pair<std::pair<EdgeId, int>, int>> seen;
    Faces f;
    int orbits = 0;
    for (const auto& [key, pos] : where)
        for (int d : {1, -1}) {
            if (seen.count({key, d})) continue;
            ++orbits;
            int len = 0;
            HalfEdge h{key.first, key.second};
            int dir = d;
            while (!seen.count({{h.edge, h.end}, dir})) {
                seen.insert({{h.edge, h.end}, dir});
                ++len;
                std::tie(h, dir) = step(h, dir);
            }
            f.sizes.push_back(2 * len);
        }
    // each face was seen twice (once per direction)
    std::sort(f.sizes.begin(), f.sizes.end());
    std::vector<int> halved;
    for (std::size_t i = 0; i < f.sizes.size(); i += 2) halved.push_back(f.sizes[i]);
    f.sizes = halved;
    f.count = orbits / 2 + isolated;
    return f;
}

inline std::set<EdgeId> ids_in(const RibbonGraph& g, EdgeMask a) {
    std::set<EdgeId> s;
    for (int p = 0; p < g.edge_count(); ++p)
        if (a >> p & 1) s.insert(g.edge_ids()[p]);
    return s;
}

inline int faces(const RibbonGraph& g, EdgeMask a) {
    return trace_faces(g.rotation_system(), ids_in(g, a)).count;
}

inline int vertex_components(const RibbonGraph& g, EdgeMask a) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < g.edge_count(); ++p)
        if (a >> p & 1) pairs.push_back(g.endpoints(p));
    return g.vertex_count() - rank(g.vertex_count(), pairs);
}

// Profile in doubled units so that half-integers stay integral.
struct Profile2 {
    int r1x2 = 0, r2x2 = 0, r3x2 = 0, r4x2 = 0, rhox2 = 0;
};

inline Profile2 profile(const ribbon::ColouredRibbonGraph& cg, EdgeMask a) {
    const RibbonGraph& g = cg.graph();
    const int m = g.edge_count();
    const EdgeMask all = m == 64 ? ~EdgeMask{0} : (EdgeMask{1} << m) - 1;
    auto vq = [&](EdgeMask s) {
        std::vector<std::pair<int, int>> pairs;
        for (int p = 0; p < m; ++p)
            if (s >> p & 1) {
                auto [u, v] = g.endpoints(p);
                pairs.push_back({cg.vclass()[u], cg.vclass()[v]});
            }
        return rank(ribbon::class_count(cg.vclass()), pairs);
    };
    auto bq = [&](EdgeMask s) {
        std::vector<std::pair<int, int>> pairs;
        for (int p = 0; p < m; ++p)
            if (s >> p & 1) {
                auto [l, r] = g.side_faces(p);
                pairs.push_back({cg.bclass()[l], cg.bclass()[r]});
            }
        return rank(ribbon::class_count(cg.bclass()), pairs);
    };
    const int size = std::popcount(a);
    Profile2 pr;
    pr.rhox2 = size + g.vertex_count() - faces(g, a);
    pr.r1x2 = 2 * vq(a);
    pr.r2x2 = pr.rhox2 - pr.r1x2;
    pr.r3x2 = 2 * (bq(all) - bq(all & ~a));
    pr.r4x2 = 2 * size - pr.rhox2 - pr.r3x2;
    return pr;
}

inline HalfPoly mono(const std::vector<std::string>& vars, const std::vector<int>& doubled) {
    return HalfPoly::monomial(vars, doubled, 1);
}

inline HalfPoly tps(const ribbon::ColouredRibbonGraph& cg) {
    const int m = cg.graph().edge_count();
    const EdgeMask all = (EdgeMask{1} << m) - 1;
    const Profile2 e = profile(cg, all);
    HalfPoly sum({"w", "x", "y", "z"});
    for (EdgeMask a = 0; a <= all; ++a) {
        Profile2 p = profile(cg, a);
        sum += mono({"w", "x", "y", "z"}, {e.r1x2 - p.r1x2, e.r2x2 - p.r2x2, p.r3x2, p.r4x2});
    }
    return sum;
}

inline HalfPoly p(const ribbon::ColouredRibbonGraph& cg) {
    const int m = cg.graph().edge_count();
    const EdgeMask all = (EdgeMask{1} << m) - 1;
    HalfPoly sum({"b_bs", "b_bp", "b_olc", "b_olh"});
    for (EdgeMask a = 0; a <= all; ++a) {
        Profile2 pr = profile(cg, a);
        sum += mono({"b_bs", "b_bp", "b_olc", "b_olh"}, {pr.r1x2, pr.r2x2, pr.r3x2, pr.r4x2});
    }
    return sum;
}

// Classical Tutte polynomial by deletion-contraction on an edge list.
inline HalfPoly tutte(int n, std::vector<std::pair<int, int>> edges) {
    if (edges.empty()) return HalfPoly::constant(1);
    auto [a, b] = edges.back();
    edges.pop_back();
    const HalfPoly x = HalfPoly::variable("x"), y = HalfPoly::variable("y");
    if (a == b) return y * tutte(n, edges);
    auto contracted = edges;
    for (auto& [u, v] : contracted) {
        if (u == b) u = a;
        if (v == b) v = a;
    }
    UnionFind uf(n);
    for (auto [u, v] : edges) uf.unite(u, v);
    if (uf.find(a) != uf.find(b)) return x * tutte(n, contracted); // bridge
    return tutte(n, edges) + tutte(n, contracted);
}

inline std::vector<RibbonGraph> random_graphs(std::uint64_t seed, int count, int v_max, int e_max) {
    std::mt19937_64 rng(seed);
    std::vector<RibbonGraph> out;
    for (int t = 0; t < count; ++t) {
        int v = 1 + static_cast<int>(rng() % v_max);
        int m = static_cast<int>(rng() % (e_max + 1));
        std::vector<std::vector<HalfEdge>> rot(v);
        std::set<EdgeId> tw;
        for (int e = 1; e <= m; ++e)
            for (int end = 1; end <= 2; ++end) {
                auto& r = rot[rng() % v];
                r.insert(r.begin() + static_cast<long>(rng() % (r.size() + 1)), HalfEdge{e, end});
            }
        for (int e = 1; e <= m; ++e)
            if (rng() % 3 == 0) tw.insert(e);
        out.push_back(make(m, rot, tw));
    }
    return out;
}

} // namespace oracle
