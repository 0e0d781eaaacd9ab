#include "ribbon/activities.hpp"

#include <algorithm>
#include <map>

namespace ribbon {

std::string activity_token(ActivityType t) {
    return t == 0 ? "unit" : std::to_string(t);
}

HalfPoly activity_coefficient(ActivityType t) {
    static const std::vector<std::string>& pv = p_variables();
    auto one = HalfPoly::constant(1).over(pv);
    switch (t) {
    case 0: return one;
    case 1: return one + p_coefficient(EdgeClass::olc);
    case 2: return one + p_coefficient(EdgeClass::olh);
    case 3: return one + p_coefficient(EdgeClass::nl);
    case 4: return one + p_coefficient(EdgeClass::bs);
    case 5: return one + p_coefficient(EdgeClass::bp);
    case 6: return p_coefficient(EdgeClass::bs);
    case 7: return p_coefficient(EdgeClass::bp);
    case 8: return p_coefficient(EdgeClass::olc);
    case 9: return p_coefficient(EdgeClass::olh);
    case 10: return p_coefficient(EdgeClass::nl);
    }
    throw std::invalid_argument("activity type out of range");
}

std::string to_string(Action a) {
    switch (a) {
    case Action::delete_edge: return "delete";
    case Action::contract_edge: return "contract";
    case Action::forced_delete: return "forced-delete";
    case Action::forced_contract: return "forced-contract";
    }
    return "?";
}

std::vector<QuasiTree> spanning_quasi_trees(const RibbonGraph& g) {
    if (g.components() != 1) throw RibbonError("spanning quasi-trees need a connected ribbon graph");
    std::vector<QuasiTree> out;
    const int m = g.edge_count();
    for (EdgeMask a = 0; a < (EdgeMask{1} << m); ++a) {
        if (g.boundary_count(a) != 1) continue;
        QuasiTree q;
        for (int p = 0; p < m; ++p)
            if (a >> p & 1) q.push_back(g.edge_ids()[p]);
        std::sort(q.begin(), q.end());
        out.push_back(std::move(q));
    }
    return out;
}

bool is_ribbon_bridge(const RibbonGraph& g, EdgeId e) {
    return is_bridge(underlying_graph(g), g.require_position(e));
}

bool is_trivial_loop(const RibbonGraph& g, EdgeId e) {
    const int pos = g.require_position(e);
    auto [u, w] = g.endpoints(pos);
    if (u != w) return false;
    // Split u into u (arc between the two ends of e) and a new vertex (the
    // other arc); e is trivial iff the two halves stay apart without e.
    const std::vector<HalfEdge> rot = g.rotation(u);
    int i = -1, j = -1;
    for (int k = 0; k < static_cast<int>(rot.size()); ++k)
        if (rot[k].edge == e) (i < 0 ? i : j) = k;
    if (j == i + 1 || (i == 0 && j + 1 == static_cast<int>(rot.size()))) return true;

    const int split = g.vertex_count();
    std::map<HalfEdge, int> host;
    RotationSystem rs = g.rotation_system();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const HalfEdge& h : rs.vertices[v]) host[h] = v;
    for (int k = 0; k < static_cast<int>(rot.size()); ++k)
        if (k > j || k < i) host[rot[k]] = split;

    std::vector<std::pair<int, int>> edges;
    for (EdgeId f : g.edge_ids()) {
        if (f == e) continue;
        edges.emplace_back(host[HalfEdge{f, 1}], host[HalfEdge{f, 2}]);
    }
    MultiGraph h(split + 1, edges);
    // connected iff adding the edge (u, split) does not lower the component count
    int before = components(h);
    edges.emplace_back(u, split);
    return components(MultiGraph(split + 1, edges)) != before;
}

namespace {

struct NodeRule {
    bool forced = false;
    Action action = Action::delete_edge;
    ActivityType forced_type = 0;  // for forced steps
    ActivityType contract_type = 0; // for branching steps
    bool sound = true;
};

NodeRule node_rule(const ColouredRibbonGraph& h, EdgeId e) {
    NodeRule r;
    EdgeType t = edge_type(h, e);
    r.contract_type = 6 + static_cast<int>(t.delete_class);
    r.sound = t.contract_class == t.delete_class;
    if (is_ribbon_bridge(h.graph(), e)) {
        r.forced = true;
        r.action = Action::forced_contract;
        r.forced_type = t.delete_class == EdgeClass::bs ? 4 : 5;
    } else if (is_trivial_loop(h.graph(), e)) {
        r.forced = true;
        r.action = Action::forced_delete;
        r.forced_type = t.delete_class == EdgeClass::olc ? 1 : t.delete_class == EdgeClass::olh ? 2 : 3;
    }
    return r;
}

void check_order(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order) {
    std::vector<EdgeId> a = order, b = cg.graph().edge_ids();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw RibbonError("edge order must list every edge exactly once");
}

void descend(const ColouredRibbonGraph& h, const std::vector<EdgeId>& order, int height, Forcing forcing,
             ResolutionBranch& cur, std::vector<ResolutionBranch>& out) {
    if (height == 0) {
        out.push_back(cur);
        return;
    }
    const EdgeId e = order[height - 1];
    NodeRule r = node_rule(h, e);
    if (r.forced && (r.sound || forcing == Forcing::always_force)) {
        cur.steps.push_back({e, r.action, r.forced_type, r.sound});
        descend(r.action == Action::forced_contract ? contract_coloured(h, e) : delete_coloured(h, e), order,
                height - 1, forcing, cur, out);
        cur.steps.pop_back();
        return;
    }
    cur.steps.push_back({e, Action::delete_edge, 0});
    descend(delete_coloured(h, e), order, height - 1, forcing, cur, out);
    cur.steps.back() = {e, Action::contract_edge, r.contract_type};
    descend(contract_coloured(h, e), order, height - 1, forcing, cur, out);
    cur.steps.pop_back();
}

} // namespace

std::vector<ResolutionBranch> resolution_branches(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order,
                                                  Forcing forcing) {
    if (cg.graph().components() > 1) throw RibbonError("resolution trees need a connected ribbon graph");
    check_order(cg, order);
    std::vector<ResolutionBranch> out;
    ResolutionBranch cur;
    descend(cg, order, static_cast<int>(order.size()), forcing, cur, out);
    return out;
}

QuasiTree branch_to_quasi_tree(const ColouredRibbonGraph& cg, const ResolutionBranch& branch) {
    QuasiTree q = cg.graph().edge_ids();
    for (const ResolutionStep& s : branch.steps)
        if (s.action == Action::delete_edge || s.action == Action::forced_delete) std::erase(q, s.edge);
    std::sort(q.begin(), q.end());
    return q;
}

ColouredRibbonGraph node_graph(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, const QuasiTree& t,
                               EdgeId e) {
    check_order(cg, order);
    ColouredRibbonGraph h = cg;
    for (auto f = order.rbegin(); *f != e; ++f) {
        bool internal = std::binary_search(t.begin(), t.end(), *f);
        h = internal ? contract_coloured(h, *f) : delete_coloured(h, *f);
    }
    return h;
}

ActivityType classify_activity(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, const QuasiTree& t,
                               EdgeId e) {
    cg.graph().require_position(e);
    ColouredRibbonGraph h = node_graph(cg, order, t, e);
    NodeRule r = node_rule(h, e);
    if (r.forced) return r.forced_type;
    return std::binary_search(t.begin(), t.end(), e) ? r.contract_type : 0;
}

bool forced_steps_sound(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order) {
    for (const ResolutionBranch& b : resolution_branches(cg, order))
        for (const ResolutionStep& s : b.steps)
            if (!s.sound) return false;
    return true;
}

HalfPoly quasi_tree_expansion(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, Forcing forcing) {
    HalfPoly sum(p_variables());
    for (const ResolutionBranch& b : resolution_branches(cg, order, forcing)) {
        HalfPoly prod = HalfPoly::constant(1).over(p_variables());
        for (const ResolutionStep& s : b.steps) prod *= activity_coefficient(s.type);
        sum += prod;
    }
    return sum.over(p_variables());
}

namespace {

// Positions of the two ends of every edge around the single vertex of g.
std::map<EdgeId, std::pair<int, int>> end_positions(const RibbonGraph& g) {
    std::map<EdgeId, std::pair<int, int>> at;
    const auto rot = g.rotation(0);
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
        auto [it, fresh] = at.try_emplace(rot[k].edge, k, -1);
        if (!fresh) it->second.second = k;
    }
    return at;
}

bool interlaced(std::pair<int, int> a, std::pair<int, int> b) {
    auto inside = [&](int k) { return a.first < k && k < a.second; };
    return inside(b.first) != inside(b.second);
}

} // namespace

ActivityPredicates activity_predicates(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, const QuasiTree& t,
                               EdgeId e) {
    const RibbonGraph& g = cg.graph();
    const int pos = g.require_position(e);
    check_order(cg, order);
    const auto rank_of = [&](EdgeId f) { return std::find(order.begin(), order.end(), f) - order.begin(); };
    const auto here = rank_of(e);

    ActivityPredicates p;
    p.internal = std::binary_search(t.begin(), t.end(), e);

    // C = tree edges strictly above e
    EdgeMask c = 0;
    for (EdgeId f : t)
        if (rank_of(f) > here) c |= EdgeMask{1} << g.position_of(f);
    const EdgeMask self = EdgeMask{1} << pos;

    auto joined = [](const MultiGraph& q, EdgeMask using_edges, int p) {
        return components(q, using_edges) == components(q, using_edges | (EdgeMask{1} << p));
    };
    p.vertex_essential = joined(quotient_vertex_graph(cg), c, pos);
    p.boundary_essential = !joined(quotient_boundary_graph(cg), g.all_edges() & ~(c | self), pos);

    RibbonGraph gt = partial_dual(g, t);
    if (gt.vertex_count() != 1) throw RibbonError("partial dual along a quasi-tree must have one vertex");
    auto at = end_positions(gt);
    p.live = true;
    for (EdgeId f : g.edge_ids())
        if (rank_of(f) < here && interlaced(at[e], at[f])) p.live = false;
    p.orientable = !gt.is_twisted(gt.require_position(e));

    ColouredRibbonGraph h = node_graph(cg, order, t, e);
    p.consistent = loop_kind(h.graph(), e) == LoopKind::orientable_loop;
    return p;
}

} // namespace ribbon
