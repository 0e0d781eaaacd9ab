#include "ribbon/check.hpp"

#include "ribbon/activities.hpp"
#include "ribbon/evaluators.hpp"
#include "ribbon/io.hpp"
#include "ribbon/random.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace ribbon {

namespace {

std::string one_line(const ColouredRibbonGraph& cg) {
    std::string s = serialize(cg);
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            if (!out.empty()) out += " / ";
        } else {
            out += c;
        }
    }
    while (out.size() >= 3 && out.substr(out.size() - 3) == " / ") out.resize(out.size() - 3);
    return out;
}

std::string order_text(const std::vector<EdgeId>& order) {
    std::string s = "(";
    for (std::size_t i = 0; i < order.size(); ++i) s += (i ? " " : "") + std::to_string(order[i]);
    return s + ")";
}

class Failures {
public:
    explicit Failures(const ColouredRibbonGraph& cg) : cg_(cg) {}
    void expect(bool ok, const std::string& what) {
        if (!ok) out_.failures.push_back(what + " on [" + one_line(cg_) + "]");
    }
    void note(const std::string& what) { out_.notes.push_back(what + " on [" + one_line(cg_) + "]"); }
    CheckResult take() { return std::move(out_); }

private:
    const ColouredRibbonGraph& cg_;
    CheckResult out_;
};

HalfPoly one() {
    return HalfPoly::constant(1);
}

bool connected(const RibbonGraph& g) {
    return g.components() == 1;
}

std::vector<EdgeId> ids_of(const RibbonGraph& g, EdgeMask a) {
    std::vector<EdgeId> ids;
    for (int p = 0; p < g.edge_count(); ++p)
        if (a >> p & 1) ids.push_back(g.edge_ids()[p]);
    return ids;
}

// (r1, r2, r3, r4) changes of the rank recursions for each one-edge class.
std::array<Half, 4> rank_delta(EdgeClass c) {
    std::array<Half, 4> d{Half{0}, Half{0}, Half{0}, Half{0}};
    switch (c) {
    case EdgeClass::bs: d[0] = Half::whole(1); break;
    case EdgeClass::bp: d[1] = Half::whole(1); break;
    case EdgeClass::olc: d[2] = Half::whole(1); break;
    case EdgeClass::olh: d[3] = Half::whole(1); break;
    case EdgeClass::nl: d[1] = d[3] = Half{1}; break;
    }
    return d;
}

bool profile_shift(const RankProfile& big, const RankProfile& small, const std::array<Half, 4>& d) {
    return Half::whole(big.r1) == Half::whole(small.r1) + d[0] && big.r2 == small.r2 + d[1] &&
           Half::whole(big.r3) == Half::whole(small.r3) + d[2] && big.r4 == small.r4 + d[3];
}

} // namespace

std::vector<EdgeId> random_order(const RibbonGraph& g, std::uint64_t salt) {
    std::vector<EdgeId> ids = g.edge_ids();
    std::sort(ids.begin(), ids.end());
    std::mt19937_64 rng(salt);
    std::shuffle(ids.begin(), ids.end(), rng);
    return ids;
}

CheckResult check_oracle_triangle(const ColouredRibbonGraph& cg, std::uint64_t salt) {
    Failures f(cg);
    const RibbonGraph& g = cg.graph();
    const auto o1 = random_order(g, salt), o2 = random_order(g, salt + 1);
    const HalfPoly us = universal_U_state_sum(cg);
    f.expect(us == universal_U_recursive(cg, o1), "U state sum != U recursion in order " + order_text(o1));
    f.expect(us == universal_U_recursive(cg, o2), "U state sum != U recursion in order " + order_text(o2));
    f.expect(us == universal_U_closed_form(cg), "U state sum != universality closed form");

    const HalfPoly p = p_normalized(cg);
    std::map<std::string, HalfPoly> to_p;
    for (const char* v : {"alpha", "beta", "gamma", "a_bs", "a_bp", "a_olc", "a_olh"}) to_p.emplace(v, one());
    f.expect(us.substitute(to_p) == p, "U specialised to the P ring != P state sum");
    f.expect(p_recursive(cg, o1) == p, "P recursion != P state sum in order " + order_text(o1));
    if (connected(g)) {
        for (const auto& o : {o1, o2}) {
            f.expect(quasi_tree_expansion(cg, o, Forcing::sound_only) == p,
                     "sound-forcing resolution != P in order " + order_text(o));
            const bool equal = quasi_tree_expansion(cg, o) == p;
            if (forced_steps_sound(cg, o))
                f.expect(equal, "quasi-tree expansion != P in order " + order_text(o));
            else if (!equal)
                f.note("quasi-tree expansion != P in order " + order_text(o) + " (unsound forced step)");
        }
    }
    return f.take();
}

CheckResult check_duality_laws(const ColouredRibbonGraph& cg, std::uint64_t) {
    Failures f(cg);
    f.expect(check_duality(cg), "T_ps / T_s / T_cps duality");
    const RibbonGraph& g = cg.graph();
    const RibbonGraph d = geometric_dual(g);
    f.expect(t_cs(g) == rename(t_cs(d), {{"x", "y"}, {"y", "x"}}), "T_cs duality");
    f.expect(equivalent(geometric_dual(d), g), "double dual");
    f.expect(equivalent(dual_coloured(dual_coloured(cg)), cg), "coloured double dual");
    return f.take();
}

CheckResult check_hierarchy(const ColouredRibbonGraph& cg, std::uint64_t) {
    Failures f(cg);
    const HalfPoly tps = t_ps(cg), ts = t_s(cg), tcps = t_cps(cg), tcs = t_cs(cg.graph());
    f.expect(tps.substitute({{"w", var("x")}}) == ts, "T_ps(w=x) != T_s");
    f.expect(tps.substitute({{"z", var("y")}}) == tcps, "T_ps(z=y) != T_cps");
    f.expect(ts.substitute({{"z", var("y")}}) == tcs, "T_s(z=y) != T_cs");
    f.expect(tcps.substitute({{"w", var("x")}}) == tcs, "T_cps(w=x) != T_cs");
    return f.take();
}

CheckResult check_classical_reduction(const ColouredRibbonGraph& cg, std::uint64_t) {
    Failures f(cg);
    const RibbonGraph& g = cg.graph();
    if (euler_genus(g) != 0) return {};
    HalfPoly shifted = t_cs(g).substitute({{"x", var("x") - one()}, {"y", var("y") - one()}});
    f.expect(shifted == tutte_classical(underlying_graph(g)), "T_cs(x-1, y-1) != classical Tutte polynomial");
    return f.take();
}

CheckResult check_bollobas_riordan(const ColouredRibbonGraph& cg, std::uint64_t) {
    Failures f(cg);
    const RibbonGraph& g = cg.graph();
    const std::vector<std::string> xyz{"x", "y", "z"};
    // partitioned form against T_cps
    {
        const Half r2 = rank_profile(cg, g.all_edges()).r2;
        HalfPoly pre = HalfPoly::monomial(xyz, {0, r2.twice, 2 * r2.twice});
        HalfPoly rhs = pre * t_cps(cg).substitute({{"w", var("x") - one()},
                                                   {"x", HalfPoly::monomial(xyz, {0, -2, -4})},
                                                   {"y", var("y")}});
        f.expect(bollobas_riordan(g, cg.vclass()) == rhs, "R_(G,V) != (yz^2)^r2 T_cps(x-1, 1/(yz^2), y)");
    }
    // classical form
    {
        const ColouredRibbonGraph plain(g);
        const int gamma = euler_genus(g);
        HalfPoly r = bollobas_riordan(g);
        HalfPoly pre = HalfPoly::monomial(xyz, {0, gamma, 2 * gamma});
        HalfPoly rhs = pre * t_cps(plain).substitute({{"w", var("x") - one()},
                                                      {"x", HalfPoly::monomial(xyz, {0, -2, -4})},
                                                      {"y", var("y")}});
        f.expect(r == rhs, "R != (yz^2)^(gamma/2) T_cps(x-1, 1/(yz^2), y)");
        HalfPoly lhs = HalfPoly::monomial({"x", "y"}, {gamma, 0}) *
                       r.substitute({{"x", var("x") + one()},
                                     {"y", var("y")},
                                     {"z", HalfPoly::monomial({"x", "y"}, {-1, -1})}});
        f.expect(lhs == t_cs(g), "x^(gamma/2) R(x+1, y, 1/sqrt(xy)) != T_cs");
    }
    return f.take();
}

CheckResult check_structural(const ColouredRibbonGraph& cg, std::uint64_t salt) {
    Failures f(cg);
    const RibbonGraph& g = cg.graph();
    const int m = g.edge_count();
    const EdgeMask all = g.all_edges();
    const MultiGraph gv = quotient_vertex_graph(cg), gb = quotient_boundary_graph(cg);
    const MultiGraph under = underlying_graph(g);
    const RankContext ctx(cg);

    // Euler consistency on every spanning subgraph
    for (EdgeMask a = 0;; a = (a - all) & all) {
        const int gam = euler_genus(g, a);
        f.expect(gam >= 0 && rho(g, a).twice == 2 * rank(under, a) + gam, "rho(A) != r(A) + gamma(A)/2");
        RankProfile r = ctx.profile(a);
        f.expect(Half::whole(r.r1) + r.r2 == r.rho, "r1 + r2 != rho");
        f.expect(Half::whole(r.r3) + r.r4 == Half::whole(std::popcount(a)) - r.rho, "r3 + r4 != |A| - rho");
        if (a == all) break;
    }

    for (int p = 0; p < m; ++p) {
        const EdgeId e = g.edge_ids()[p];
        const std::string tag = "edge " + std::to_string(e) + ": ";
        const EdgeType t = edge_type(cg, e);
        f.expect(t == edge_type_direct(cg, e), tag + "edge type from criteria != direct computation");

        const LoopKind lk = loop_kind(g, e);
        if (lk != LoopKind::not_loop) f.expect(is_loop(gv, p), tag + "loop in G but not in G/V");
        if (is_bridge(gb, p)) f.expect(lk == LoopKind::orientable_loop, tag + "bridge in G*/B but not an orientable loop");

        const ColouredRibbonGraph del = delete_coloured(cg, e), con = contract_coloured(cg, e);
        f.expect(is_doop(g, e) == [&] {
            switch (loop_kind(geometric_dual(g), e)) {
            case LoopKind::not_loop: return DoopKind::not_doop;
            case LoopKind::orientable_loop: return DoopKind::orientable_doop;
            default: return DoopKind::nonorientable_doop;
            }
        }(), tag + "doop status != loop status in the dual");

        // rank recursions: whole-graph shifts, and per subset
        const RankContext cd(del), cc(con);
        const auto dd = rank_delta(t.contract_class), ee = rank_delta(t.delete_class);
        f.expect(profile_shift(ctx.profile(all), cd.profile(del.graph().all_edges()), dd),
                 tag + "r_k(G) != r_k(G\\e) + delta");
        f.expect(profile_shift(ctx.profile(all), cc.profile(con.graph().all_edges()), ee),
                 tag + "r_k(G) != r_k(G/e) + epsilon");
        const std::array<Half, 4> none{Half{0}, Half{0}, Half{0}, Half{0}};
        for (EdgeMask a = 0;; a = (a - all) & all) {
            std::vector<EdgeId> ids = ids_of(g, a);
            if (a >> p & 1) {
                std::erase(ids, e);
                f.expect(profile_shift(ctx.profile(a), cc.profile(con.graph().mask_of(ids)), ee),
                         tag + "subset rank recursion through contraction");
            } else {
                // a subset avoiding e sees the same ranks in G and G\e
                f.expect(profile_shift(ctx.profile(a), cd.profile(del.graph().mask_of(ids)), none),
                         tag + "subset rank recursion through deletion");
            }
            if (a == all) break;
        }

        // rho recursions
        const Half rg = rho(g, all);
        const Half rd = rho(del.graph(), del.graph().all_edges()), rc = rho(con.graph(), con.graph().all_edges());
        switch (is_doop(g, e)) {
        // deleting a non-doop fuses two boundary components; deleting an
        // orientable doop splits one
        case DoopKind::not_doop: f.expect(rg == rd, tag + "rho deletion recursion"); break;
        case DoopKind::orientable_doop: f.expect(rg == rd + Half::whole(1), tag + "rho deletion recursion"); break;
        case DoopKind::nonorientable_doop: f.expect(rg == rd + Half{1}, tag + "rho deletion recursion"); break;
        }
        switch (lk) {
        case LoopKind::not_loop: f.expect(rg == rc + Half::whole(1), tag + "rho contraction recursion"); break;
        case LoopKind::orientable_loop: f.expect(rg == rc, tag + "rho contraction recursion"); break;
        case LoopKind::nonorientable_loop: f.expect(rg == rc + Half{1}, tag + "rho contraction recursion"); break;
        }

        // component counts of the quotients, and vertex counts
        const MultiGraph dv = quotient_vertex_graph(del), cv = quotient_vertex_graph(con);
        const MultiGraph db = quotient_boundary_graph(del), cb = quotient_boundary_graph(con);
        f.expect(components(gv) == components(dv) - (t.contract_class == EdgeClass::bs ? 1 : 0),
                 tag + "k(G/V) vs deletion");
        f.expect(components(gv) == components(cv), tag + "k(G/V) vs contraction");
        f.expect(components(gb) == components(db), tag + "k(G*/B) vs deletion");
        f.expect(components(gb) == components(cb) - (t.delete_class == EdgeClass::olc ? 1 : 0),
                 tag + "k(G*/B) vs contraction");
        const int dv_count = t.delete_class == EdgeClass::nl                                        ? 0
                             : t.delete_class == EdgeClass::olc || t.delete_class == EdgeClass::olh ? -1
                                                                                                    : 1;
        f.expect(g.vertex_count() == con.graph().vertex_count() + dv_count, tag + "v(G) vs v(G/e)");
        f.expect(g.vertex_count() == del.graph().vertex_count(), tag + "v(G) vs v(G\\e)");
        f.expect(g.boundary_count() == con.graph().boundary_count(), tag + "contraction changed b");

        // quotient commutation
        f.expect(same_up_to_vertex_names(cv, contract_edge(gv, p)), tag + "(G/e)/V != (G/V)/e");
        f.expect(same_up_to_vertex_names(dv, delete_edge(gv, p)), tag + "(G\\e)/V != (G/V)\\e");
        f.expect(same_up_to_vertex_names(db, contract_edge(gb, p)), tag + "(G\\e)*/B != (G*/B)/e");
        f.expect(same_up_to_vertex_names(cb, delete_edge(gb, p)), tag + "(G/e)*/B != (G*/B)\\e");

        // minors and duality
        const ColouredRibbonGraph dual = dual_coloured(cg);
        f.expect(equivalent(dual_coloured(con), delete_coloured(dual, e)), tag + "(G/e)* != G*\\e (coloured)");
        f.expect(equivalent(dual_coloured(del), contract_coloured(dual, e)), tag + "(G\\e)* != G*/e (coloured)");
        f.expect(equivalent(contract_edge(g, e), delete_edge(partial_dual(g, {e}), e)),
                 tag + "G/e != G^{e}\\e");
    }

    std::mt19937_64 rng(salt);
    if (m >= 2) {
        // deletion and contraction of two distinct edges commute
        std::vector<EdgeId> ids = random_order(g, salt + 7);
        const EdgeId a = ids[0], b = ids[1];
        using Op = ColouredRibbonGraph (*)(const ColouredRibbonGraph&, EdgeId);
        for (Op x : {&delete_coloured, &contract_coloured})
            for (Op y : {&delete_coloured, &contract_coloured})
                f.expect(equivalent(y(x(cg, a), b), x(y(cg, b), a)),
                         "minors of edges " + std::to_string(a) + ", " + std::to_string(b) + " do not commute");
    }
    {
        // partial-dual laws
        const EdgeMask a = m == 0 ? 0 : (rng() & all);
        const std::vector<EdgeId> ids = ids_of(g, a);
        f.expect(equivalent(partial_dual(partial_dual(g, ids), ids), g), "partial dual is not an involution");
        f.expect(equivalent(partial_dual(g, g.edge_ids()), geometric_dual(g)), "G^E != G*");
    }

    if (connected(g)) {
        const auto order = random_order(g, salt + 3);
        const auto branches = resolution_branches(cg, order);
        std::set<QuasiTree> images;
        bool any_type3 = false;
        for (const ResolutionBranch& br : branches) {
            const QuasiTree q = branch_to_quasi_tree(cg, br);
            f.expect(images.insert(q).second, "two leaves give the same quasi-tree");
            f.expect(g.boundary_count(g.mask_of(q)) == 1, "leaf image is not a quasi-tree");
            for (const ResolutionStep& s : br.steps) {
                const std::string tag = "order " + order_text(order) + ", edge " + std::to_string(s.edge) + ": ";
                if (s.type == 3) any_type3 = true;
                f.expect(classify_activity(cg, order, q, s.edge) == s.type, tag + "activity type != branch label");
                const ColouredRibbonGraph h = node_graph(cg, order, q, s.edge);
                const int hp = h.graph().require_position(s.edge);
                const ActivityPredicates pr = activity_predicates(cg, order, q, s.edge);
                const LoopKind hk = loop_kind(h.graph(), s.edge);
                const bool trivial = is_trivial_loop(h.graph(), s.edge);
                f.expect(is_loop(quotient_vertex_graph(h), hp) == pr.vertex_essential,
                         tag + "loop in H/V vs vertex essential");
                f.expect(is_bridge(quotient_boundary_graph(h), hp) == pr.boundary_essential,
                         tag + "bridge in H*/B vs boundary essential");
                f.expect((trivial && hk == LoopKind::orientable_loop) == (!pr.internal && pr.live && pr.orientable),
                         tag + "trivial orientable loop vs externally live orientable");
                f.expect((trivial && hk == LoopKind::nonorientable_loop) == (pr.live && !pr.orientable),
                         tag + "trivial non-orientable loop vs live non-orientable");
                f.expect(is_ribbon_bridge(h.graph(), s.edge) == (pr.internal && pr.live && pr.orientable),
                         tag + "bridge in H vs internally live orientable");
            }
        }
        if (!any_type3) {
            auto all_q = spanning_quasi_trees(g);
            f.expect(std::set<QuasiTree>(all_q.begin(), all_q.end()) == images,
                     "leaves do not cover every spanning quasi-tree");
        }
    }
    return f.take();
}

CheckResult check_join(const ColouredRibbonGraph& cg, std::uint64_t salt) {
    Failures f(cg);
    const RibbonGraph& g = cg.graph();
    if (g.vertex_count() == 0) return {};
    std::mt19937_64 rng(salt);
    const ColouredRibbonGraph other = random_coloured_ribbon_graph(rng(), 2, 2);
    const int vg = static_cast<int>(rng() % g.vertex_count());
    const int vh = static_cast<int>(rng() % other.graph().vertex_count());
    const int dg = static_cast<int>(g.rotation(vg).size()), dh = static_cast<int>(other.graph().rotation(vh).size());
    const int arc_g = static_cast<int>(rng() % (dg + 1)) - 1;
    const int arc_h = dh == 0 ? 0 : static_cast<int>(rng() % dh);
    const ColouredRibbonGraph joined = join_at(cg, vg, other, vh, arc_g, arc_h);
    const ColouredRibbonGraph apart = disjoint_union(cg, other);
    f.expect(p_normalized(joined) == p_normalized(apart),
             "P(join) != P(disjoint union) with [" + one_line(other) + "] at vertices " + std::to_string(vg + 1) +
                 ", " + std::to_string(vh + 1));
    return f.take();
}

const std::vector<std::pair<std::string, PropertyCheck>>& all_properties() {
    static const std::vector<std::pair<std::string, PropertyCheck>> props{
        {"oracle_triangle", check_oracle_triangle},
        {"duality", check_duality_laws},
        {"hierarchy", check_hierarchy},
        {"classical_reduction", check_classical_reduction},
        {"bollobas_riordan", check_bollobas_riordan},
        {"structural", check_structural},
        {"join", check_join},
    };
    return props;
}

int SuiteReport::total_failures() const {
    int n = 0;
    for (const auto& [k, v] : failures) n += v;
    return n;
}

SuiteReport run_suite(const std::vector<ColouredRibbonGraph>& corpus, std::uint64_t seed,
                      const std::vector<std::string>& properties, int keep_messages) {
    SuiteReport rep;
    for (const auto& [name, fn] : all_properties())
        if (properties.empty() || std::find(properties.begin(), properties.end(), name) != properties.end())
            rep.failures[name] = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        ++rep.graphs;
        const std::uint64_t salt = seed * 0x9E3779B97F4A7C15ULL + i;
        for (const auto& [name, fn] : all_properties()) {
            if (!rep.failures.count(name)) continue;
            CheckResult r;
            try {
                r = fn(corpus[i], salt);
            } catch (const std::exception& ex) {
                r.failures.push_back(std::string("exception: ") + ex.what() + " on [" + one_line(corpus[i]) + "]");
            }
            rep.failures[name] += static_cast<int>(r.failures.size());
            for (auto& m : r.failures)
                if (static_cast<int>(rep.messages.size()) < keep_messages) rep.messages.push_back(name + ": " + m);
            if (!r.notes.empty()) rep.notes[name] += static_cast<int>(r.notes.size());
            for (auto& m : r.notes)
                if (static_cast<int>(rep.note_messages.size()) < keep_messages)
                    rep.note_messages.push_back(name + ": " + m);
        }
    }
    return rep;
}

std::vector<ColouredRibbonGraph> random_corpus(std::uint64_t seed, int count, int v_max, int e_max) {
    std::vector<ColouredRibbonGraph> out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) out.push_back(random_coloured_ribbon_graph(rng(), v_max, e_max));
    return out;
}

} // namespace ribbon
