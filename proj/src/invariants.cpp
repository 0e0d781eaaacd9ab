#include "ribbon/invariants.hpp"

#include <bit>

namespace ribbon {

std::string to_string(EdgeClass c) {
    switch (c) {
    case EdgeClass::bs: return "bs";
    case EdgeClass::bp: return "bp";
    case EdgeClass::olc: return "olc";
    case EdgeClass::olh: return "olh";
    case EdgeClass::nl: return "nl";
    }
    return "?";
}

LoopKind loop_kind(const RibbonGraph& g, EdgeId e) {
    int p = g.require_position(e);
    auto [u, v] = g.endpoints(p);
    if (u != v) return LoopKind::not_loop;
    return g.is_twisted(p) ? LoopKind::nonorientable_loop : LoopKind::orientable_loop;
}

DoopKind is_doop(const RibbonGraph& g, EdgeId e) {
    const int p = g.require_position(e);
    const int side1 = 4 * p, side2 = g.alpha2(4 * p); // end-1 corners of the two sides
    const int f = g.face_of_flag(side1);
    if (g.face_of_flag(side2) != f) return DoopKind::not_doop;
    // Walk the face; a side is run "forwards" when its end-1 corner is left
    // by an a0 step.  The dual loop is untwisted iff the sides run opposite.
    int start = side1, y = start;
    bool forward1 = false, forward2 = false;
    do {
        if (y == side1) forward1 = true;
        if (y == side2) forward2 = true;
        y = g.alpha1(g.alpha0(y));
    } while (y != start);
    return forward1 != forward2 ? DoopKind::orientable_doop : DoopKind::nonorientable_doop;
}

RankContext::RankContext(const ColouredRibbonGraph& cg)
    : cg_(&cg), gv_(quotient_vertex_graph(cg)), gb_(quotient_boundary_graph(cg)), all_(cg.graph().all_edges()),
      rb_all_(rank(gb_, all_)) {}

RankProfile RankContext::profile(EdgeMask a) const {
    const RibbonGraph& g = cg_->graph();
    RankProfile r;
    const int size = std::popcount(a);
    r.rho = rho(g, a);
    r.r1 = rank(gv_, a);
    r.r2 = r.rho - Half::whole(r.r1);
    const int rb_comp = rank(gb_, all_ & ~a);
    r.r3 = rb_all_ - rb_comp;
    r.r4 = Half::whole(size + rb_comp - rb_all_) - r.rho;
    return r;
}

RankProfile rank_profile(const ColouredRibbonGraph& cg, EdgeMask a) {
    return RankContext(cg).profile(a);
}

EdgeType edge_type(const ColouredRibbonGraph& cg, EdgeId e) {
    const RibbonGraph& g = cg.graph();
    const int p = g.require_position(e);
    MultiGraph gv = quotient_vertex_graph(cg);
    MultiGraph gb = quotient_boundary_graph(cg);
    EdgeType t{};
    switch (is_doop(g, e)) {
    case DoopKind::nonorientable_doop: t.contract_class = EdgeClass::nl; break;
    case DoopKind::orientable_doop: t.contract_class = is_bridge(gv, p) ? EdgeClass::bs : EdgeClass::bp; break;
    case DoopKind::not_doop: t.contract_class = is_loop(gb, p) ? EdgeClass::olh : EdgeClass::olc; break;
    }
    switch (loop_kind(g, e)) {
    case LoopKind::nonorientable_loop: t.delete_class = EdgeClass::nl; break;
    case LoopKind::orientable_loop: t.delete_class = is_bridge(gb, p) ? EdgeClass::olc : EdgeClass::olh; break;
    case LoopKind::not_loop: t.delete_class = is_loop(gv, p) ? EdgeClass::bp : EdgeClass::bs; break;
    }
    return t;
}

ColouredRibbonGraph drop_isolated(const ColouredRibbonGraph& cg) {
    const RibbonGraph& g = cg.graph();
    RotationSystem rs = g.rotation_system();
    RotationSystem kept;
    kept.edges = rs.edges;
    kept.twisted = rs.twisted;
    std::vector<int> vlabel;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_isolated(v)) continue;
        kept.vertices.push_back(rs.vertices[v]);
        vlabel.push_back(cg.vclass()[v]);
    }
    RibbonGraph h(kept);
    // flagged boundary components keep their canonical order
    std::vector<int> blabel(cg.bclass().begin(), cg.bclass().begin() + h.boundary_count());
    return ColouredRibbonGraph(h, vlabel, blabel);
}

EdgeClass classify_one_edge(const ColouredRibbonGraph& cg) {
    const RibbonGraph& g = cg.graph();
    if (g.edge_count() != 1 || g.isolated_vertex_count() != 0)
        throw RibbonError("classify_one_edge needs exactly one edge and no isolated vertices");
    auto [u, v] = g.endpoints(0);
    if (u != v) return cg.vclass()[u] == cg.vclass()[v] ? EdgeClass::bp : EdgeClass::bs;
    if (g.is_twisted(0)) return EdgeClass::nl;
    return cg.bclass()[0] == cg.bclass()[1] ? EdgeClass::olh : EdgeClass::olc;
}

EdgeType edge_type_direct(const ColouredRibbonGraph& cg, EdgeId e) {
    cg.graph().require_position(e);
    ColouredRibbonGraph contracted = cg, deleted = cg;
    for (EdgeId f : cg.graph().edge_ids()) {
        if (f == e) continue;
        contracted = contract_coloured(contracted, f);
        deleted = delete_coloured(deleted, f);
    }
    return EdgeType{classify_one_edge(drop_isolated(contracted)), classify_one_edge(drop_isolated(deleted))};
}

} // namespace ribbon
