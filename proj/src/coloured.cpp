#include "ribbon/coloured.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ribbon {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

} // namespace

Partition normalise(const std::vector<int>& labels) {
    std::map<int, int> rename;
    Partition p;
    p.reserve(labels.size());
    for (int l : labels) {
        auto it = rename.emplace(l, static_cast<int>(rename.size())).first;
        p.push_back(it->second);
    }
    return p;
}

Partition discrete_partition(int n) {
    Partition p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Partition single_class(int n) {
    return Partition(n, 0);
}

int class_count(const Partition& p) {
    return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

std::vector<std::vector<int>> blocks(const Partition& p) {
    std::vector<std::vector<int>> out(class_count(p));
    for (int i = 0; i < static_cast<int>(p.size()); ++i) out[p[i]].push_back(i);
    return out;
}

Partition from_blocks(int n, const std::vector<std::vector<int>>& bl) {
    std::vector<int> label(n, -1);
    for (std::size_t b = 0; b < bl.size(); ++b) {
        if (bl[b].empty()) throw RibbonError("empty class in partition");
        for (int x : bl[b]) {
            if (x < 0 || x >= n)
                throw RibbonError("class member " + std::to_string(x + 1) + " out of range 1.." + std::to_string(n));
            if (label[x] != -1) throw RibbonError("element " + std::to_string(x + 1) + " lies in two classes");
            label[x] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n; ++i)
        if (label[i] == -1) throw RibbonError("element " + std::to_string(i + 1) + " lies in no class");
    return normalise(label);
}

ColouredRibbonGraph::ColouredRibbonGraph(RibbonGraph g)
    : graph_(std::move(g)), vclass_(discrete_partition(graph_.vertex_count())),
      bclass_(discrete_partition(graph_.boundary_count())) {}

ColouredRibbonGraph::ColouredRibbonGraph(RibbonGraph g, Partition vclass, Partition bclass)
    : graph_(std::move(g)), vclass_(normalise(vclass)), bclass_(normalise(bclass)) {
    if (static_cast<int>(vclass_.size()) != graph_.vertex_count())
        throw RibbonError("vertex partition covers " + std::to_string(vclass_.size()) + " vertices, graph has " +
                          std::to_string(graph_.vertex_count()));
    if (static_cast<int>(bclass_.size()) != graph_.boundary_count())
        throw RibbonError("boundary partition covers " + std::to_string(bclass_.size()) +
                          " components, graph has b = " + std::to_string(graph_.boundary_count()));
}

ColouredRibbonGraph delete_coloured(const ColouredRibbonGraph& cg, EdgeId e) {
    const RibbonGraph& g = cg.graph();
    MinorResult r = g.delete_edge_tracked(e);
    const RibbonGraph& h = r.graph;
    const int nc = class_count(cg.bclass());
    Dsu d(nc + h.boundary_count());
    auto old_class = [&](int face) { return cg.bclass()[face]; };
    // Distinct faces along the two sides of e always fuse, even when one of
    // them runs only along e and so keeps no flag.
    auto [left, right] = g.side_faces(g.require_position(e));
    d.unite(old_class(left), old_class(right));
    for (int x = 0; x < g.flag_count(); ++x) {
        int y = r.flag_image[x];
        if (y >= 0) d.unite(old_class(g.face_of_flag(x)), nc + h.face_of_flag(y));
    }
    for (int w = 0; w < h.vertex_count(); ++w) {
        if (!h.is_isolated(w)) continue;
        int f = nc + h.face_of_isolated_vertex(w);
        if (g.is_isolated(w)) {
            d.unite(old_class(g.face_of_isolated_vertex(w)), f);
        } else {
            for (int x : r.consumed[w]) d.unite(old_class(g.face_of_flag(x)), f);
        }
    }
    std::vector<int> label(h.boundary_count());
    for (int f = 0; f < h.boundary_count(); ++f) label[f] = d.find(nc + f);
    return ColouredRibbonGraph(h, cg.vclass(), label);
}

ColouredRibbonGraph contract_coloured(const ColouredRibbonGraph& cg, EdgeId e) {
    const RibbonGraph& g = cg.graph();
    const int pos = g.require_position(e);
    MinorResult r = g.contract_edge_tracked(e);
    const RibbonGraph& h = r.graph;

    auto [u, v] = g.endpoints(pos);
    Dsu d(class_count(cg.vclass()));
    d.unite(cg.vclass()[u], cg.vclass()[v]);
    std::vector<int> vlabel(h.vertex_count());
    for (int w = 0; w < h.vertex_count(); ++w) {
        int o = r.vertex_origin[w];
        vlabel[w] = d.find(cg.vclass()[o >= 0 ? o : u]);
    }

    // contraction keeps the boundary components, so transport them
    std::vector<int> preimage(h.flag_count(), -1);
    for (int x = 0; x < g.flag_count(); ++x)
        if (r.flag_image[x] >= 0) preimage[r.flag_image[x]] = x;
    std::vector<int> source(h.boundary_count(), -1);
    for (int y = 0; y < h.flag_count(); ++y) {
        int f = h.face_of_flag(y), o = g.face_of_flag(preimage[y]);
        if (source[f] >= 0 && source[f] != o) throw std::logic_error("contraction split a boundary component");
        source[f] = o;
    }
    for (int w = 0; w < h.vertex_count(); ++w) {
        if (!h.is_isolated(w)) continue;
        int f = h.face_of_isolated_vertex(w);
        int o = r.vertex_origin[w];
        if (o >= 0) {
            source[f] = g.face_of_isolated_vertex(o);
        } else {
            if (r.consumed[w].empty()) throw std::logic_error("formed isolated vertex without consumed corners");
            source[f] = g.face_of_flag(r.consumed[w].front());
            for (int x : r.consumed[w])
                if (g.face_of_flag(x) != source[f]) throw std::logic_error("consumed corners on two boundaries");
        }
    }
    std::vector<int> blabel(h.boundary_count());
    std::vector<bool> used(g.boundary_count(), false);
    for (int f = 0; f < h.boundary_count(); ++f) {
        if (source[f] < 0 || used[source[f]]) throw std::logic_error("contraction boundary transport is not a bijection");
        used[source[f]] = true;
        blabel[f] = cg.bclass()[source[f]];
    }
    return ColouredRibbonGraph(h, vlabel, blabel);
}

ColouredRibbonGraph dual_coloured(const ColouredRibbonGraph& cg) {
    const RibbonGraph& g = cg.graph();
    RibbonGraph d = g.geometric_dual();
    // dual vertex i is boundary component i of g
    std::vector<int> vlabel(d.vertex_count());
    for (int i = 0; i < d.vertex_count(); ++i) vlabel[i] = cg.bclass()[i];
    // dual boundary components are the vertices of g
    std::vector<int> blabel(d.boundary_count());
    for (int f = 0; f < d.boundary_count(); ++f) {
        int w = d.isolated_vertex_of_face(f);
        int gv;
        if (w < 0) {
            int x = 0;
            while (d.face_of_flag(x) != f) ++x;
            gv = g.vertex_of_flag(x);
        } else {
            gv = g.isolated_vertex_of_face(w);
        }
        blabel[f] = cg.vclass()[gv];
    }
    return ColouredRibbonGraph(d, vlabel, blabel);
}

namespace {

// Where a boundary component of a graph rebuilt from g and h comes from.
// Returns -1 for "none"; otherwise an index into g's faces, or
// g.boundary_count() + index into h's faces.
int source_face_of_flag(const RibbonGraph& combined, int y, const RibbonGraph& g, const RibbonGraph& h,
                        EdgeId offset) {
    SideFlag sf = combined.side_flag(y);
    if (sf.edge <= offset) return g.face_of_flag(g.flag_of(sf));
    sf.edge -= offset;
    return g.boundary_count() + h.face_of_flag(h.flag_of(sf));
}

// face of `g` at the corner just before rotation position `at` of vertex v
int corner_face(const RibbonGraph& g, int v, int at) {
    auto rot = g.rotation(v);
    const HalfEdge& before = rot[(at + rot.size() - 1) % rot.size()];
    SideFlag next{before.edge, before.end, before.end == 1 ? Side::right : Side::left};
    return g.face_of_flag(g.flag_of(next));
}

} // namespace

ColouredRibbonGraph disjoint_union(const ColouredRibbonGraph& g, const ColouredRibbonGraph& h) {
    return join_at(g, -1, h, -1);
}

ColouredRibbonGraph join_at(const ColouredRibbonGraph& cg, int vg, const ColouredRibbonGraph& ch, int vh, int arc_g,
                            int arc_h) {
    const RibbonGraph& g = cg.graph();
    const RibbonGraph& h = ch.graph();
    const bool joining = vg >= 0 || vh >= 0;
    const EdgeId offset = id_offset_for(g);
    RibbonGraph j = joining ? join_at(g, vg, h, vh, arc_g, arc_h) : disjoint_union(g, h);

    const int ncg = class_count(cg.vclass()), nch = class_count(ch.vclass());
    Dsu dv(ncg + nch);
    std::vector<int> vsource; // classes in the combined numbering
    for (int v = 0; v < g.vertex_count(); ++v) vsource.push_back(cg.vclass()[v]);
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!joining || v != vh) vsource.push_back(ncg + ch.vclass()[v]);
    if (joining) dv.unite(cg.vclass()[vg], ncg + ch.vclass()[vh]);
    std::vector<int> vlabel(j.vertex_count());
    for (int v = 0; v < j.vertex_count(); ++v) vlabel[v] = dv.find(vsource[v]);

    const int bcg = class_count(cg.bclass()), bch = class_count(ch.bclass());
    Dsu db(bcg + bch);
    auto face_class = [&](int src) {
        return src < g.boundary_count() ? cg.bclass()[src] : bcg + ch.bclass()[src - g.boundary_count()];
    };
    std::vector<int> anchor(j.boundary_count(), -1);
    auto attach = [&](int f, int src) {
        int c = face_class(src);
        if (anchor[f] < 0)
            anchor[f] = c;
        else
            db.unite(anchor[f], c);
    };
    for (int y = 0; y < j.flag_count(); ++y) attach(j.face_of_flag(y), source_face_of_flag(j, y, g, h, offset));
    // isolated vertices of the result, in order: g's (incl. a merged one), then h's
    std::vector<int> iso_src;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (joining && v == vg) {
            if (g.is_isolated(v) && h.is_isolated(vh)) iso_src.push_back(v);
            continue;
        }
        if (g.is_isolated(v)) iso_src.push_back(v);
    }
    for (int v = 0; v < h.vertex_count(); ++v)
        if ((!joining || v != vh) && h.is_isolated(v)) iso_src.push_back(g.vertex_count() + v);
    int k = 0;
    for (int w = 0; w < j.vertex_count(); ++w) {
        if (!j.is_isolated(w)) continue;
        int f = j.face_of_isolated_vertex(w);
        int s = iso_src.at(k++);
        if (s < g.vertex_count()) {
            attach(f, g.face_of_isolated_vertex(s));
            if (joining && s == vg) attach(f, g.boundary_count() + h.face_of_isolated_vertex(vh));
        } else {
            attach(f, g.boundary_count() + h.face_of_isolated_vertex(s - g.vertex_count()));
        }
    }
    if (joining) {
        // an isolated vertex's boundary is absorbed into the face at the cut corner
        const int at_g = arc_g < 0 ? static_cast<int>(g.rotation(vg).size()) : arc_g;
        auto flag_in_face = [](const RibbonGraph& x, int f) {
            int y = 0;
            while (x.face_of_flag(y) != f) ++y;
            return y;
        };
        if (g.is_isolated(vg) && !h.is_isolated(vh)) {
            SideFlag probe = h.side_flag(flag_in_face(h, corner_face(h, vh, arc_h)));
            probe.edge += offset;
            attach(j.face_of_flag(j.flag_of(probe)), g.face_of_isolated_vertex(vg));
        } else if (!g.is_isolated(vg) && h.is_isolated(vh)) {
            SideFlag probe = g.side_flag(flag_in_face(g, corner_face(g, vg, at_g)));
            attach(j.face_of_flag(j.flag_of(probe)), g.boundary_count() + h.face_of_isolated_vertex(vh));
        }
    }
    std::vector<int> blabel(j.boundary_count());
    for (int f = 0; f < j.boundary_count(); ++f) blabel[f] = db.find(anchor[f]);
    return ColouredRibbonGraph(j, vlabel, blabel);
}

MultiGraph quotient_vertex_graph(const ColouredRibbonGraph& cg) {
    const RibbonGraph& g = cg.graph();
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < g.edge_count(); ++p) {
        auto [u, v] = g.endpoints(p);
        edges.emplace_back(cg.vclass()[u], cg.vclass()[v]);
    }
    return MultiGraph(class_count(cg.vclass()), std::move(edges), g.edge_ids());
}

MultiGraph quotient_boundary_graph(const ColouredRibbonGraph& cg) {
    const RibbonGraph& g = cg.graph();
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < g.edge_count(); ++p) {
        auto [f1, f2] = g.side_faces(p);
        edges.emplace_back(cg.bclass()[f1], cg.bclass()[f2]);
    }
    return MultiGraph(class_count(cg.bclass()), std::move(edges), g.edge_ids());
}

namespace {

// Extends `map` along the three involutions from root -> target.
bool grow(const RibbonGraph& a, const RibbonGraph& b, int root, int target, std::vector<int>& map) {
    std::vector<int> stack{root};
    map[root] = target;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        int y = map[x];
        if (x / 4 != y / 4) return false; // same edge position (ids are equal)
        const int ax[3] = {a.alpha0(x), a.alpha1(x), a.alpha2(x)};
        const int by[3] = {b.alpha0(y), b.alpha1(y), b.alpha2(y)};
        for (int i = 0; i < 3; ++i) {
            if (map[ax[i]] < 0) {
                map[ax[i]] = by[i];
                stack.push_back(ax[i]);
            } else if (map[ax[i]] != by[i]) {
                return false;
            }
        }
    }
    return true;
}

// true iff x ~ y defined by pairs (p[i], q[map(i)]) is a bijection of classes
bool classes_correspond(const Partition& p, const Partition& q, const std::vector<int>& map) {
    std::map<int, int> fwd, back;
    for (std::size_t i = 0; i < map.size(); ++i) {
        int a = p[i], b = q[map[i]];
        auto [it1, ok1] = fwd.emplace(a, b);
        auto [it2, ok2] = back.emplace(b, a);
        if (it1->second != b || it2->second != a) return false;
    }
    return true;
}

} // namespace

bool equivalent(const ColouredRibbonGraph& ca, const ColouredRibbonGraph& cb) {
    const RibbonGraph& a = ca.graph();
    const RibbonGraph& b = cb.graph();
    if (a.edge_ids() != b.edge_ids() || a.vertex_count() != b.vertex_count() ||
        a.boundary_count() != b.boundary_count() || a.isolated_vertex_count() != b.isolated_vertex_count())
        return false;
    if (class_count(ca.vclass()) != class_count(cb.vclass()) || class_count(ca.bclass()) != class_count(cb.bclass()))
        return false;
    if (!equivalent(a, b)) return false;

    const int n = a.flag_count();
    // roots: the least corner of each flag component
    std::vector<int> comp(n, -1), roots;
    for (int x = 0; x < n; ++x) {
        if (comp[x] >= 0) continue;
        roots.push_back(x);
        std::vector<int> stack{x};
        comp[x] = static_cast<int>(roots.size()) - 1;
        while (!stack.empty()) {
            int z = stack.back();
            stack.pop_back();
            for (int w : {a.alpha0(z), a.alpha1(z), a.alpha2(z)})
                if (comp[w] < 0) {
                    comp[w] = comp[x];
                    stack.push_back(w);
                }
        }
    }
    std::vector<std::vector<std::vector<int>>> options(roots.size());
    for (std::size_t c = 0; c < roots.size(); ++c) {
        int r = roots[c];
        for (int t = 4 * (r / 4); t < 4 * (r / 4) + 4; ++t) {
            std::vector<int> map(n, -1);
            if (grow(a, b, r, t, map)) options[c].push_back(std::move(map));
        }
        if (options[c].empty()) return false;
    }
    std::vector<int> iso_a, iso_b;
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (a.is_isolated(v)) iso_a.push_back(v);
        if (b.is_isolated(v)) iso_b.push_back(v);
    }
    std::vector<std::size_t> choice(roots.size(), 0);
    for (;;) {
        std::vector<int> fmap(n);
        for (int x = 0; x < n; ++x) fmap[x] = options[comp[x]][choice[comp[x]]][x];
        std::vector<int> vmap(a.vertex_count(), -1), bmap(a.boundary_count(), -1);
        for (int x = 0; x < n; ++x) {
            vmap[a.vertex_of_flag(x)] = b.vertex_of_flag(fmap[x]);
            bmap[a.face_of_flag(x)] = b.face_of_flag(fmap[x]);
        }
        std::vector<int> perm(iso_b.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (std::size_t i = 0; i < iso_a.size(); ++i) {
                vmap[iso_a[i]] = iso_b[perm[i]];
                bmap[a.face_of_isolated_vertex(iso_a[i])] = b.face_of_isolated_vertex(iso_b[perm[i]]);
            }
            if (classes_correspond(ca.vclass(), cb.vclass(), vmap) && classes_correspond(ca.bclass(), cb.bclass(), bmap))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::size_t c = 0;
        while (c < roots.size() && ++choice[c] == options[c].size()) choice[c++] = 0;
        if (c == roots.size()) return false;
    }
}

} // namespace ribbon
