#include "ribbon/evaluators.hpp"

#include <bit>
#include <map>

namespace ribbon {

namespace {

enum UVar { kAlpha, kBeta, kGamma, kAbs, kAbp, kAolc, kAolh, kBbs, kBbp, kBolc, kBolh, kUCount };

// Accumulates monomials with doubled exponents into a polynomial.
class Accumulator {
public:
    explicit Accumulator(const std::vector<std::string>& vars) : vars_(vars) {}
    void add(const HalfPoly::Exponents& e) { ++counts_[e]; }
    HalfPoly result() const {
        HalfPoly p(vars_);
        for (const auto& [e, c] : counts_) p.add_term(e, c);
        return p;
    }

private:
    std::vector<std::string> vars_;
    std::map<HalfPoly::Exponents, Integer> counts_;
};

HalfPoly unit_monomial(const std::vector<std::string>& vars, std::initializer_list<std::pair<int, int>> exps) {
    HalfPoly::Exponents e(vars.size(), 0);
    for (auto [i, d] : exps) e[i] += d;
    return HalfPoly::monomial(vars, e);
}

template <class Fn>
void for_each_subset(EdgeMask all, Fn&& fn) {
    for (EdgeMask a = 0;; a = (a - all) & all) {
        fn(a);
        if (a == all) break;
    }
}

} // namespace

const std::vector<std::string>& universal_variables() {
    static const std::vector<std::string> v{"alpha", "beta", "gamma", "a_bs", "a_bp", "a_olc",
                                            "a_olh", "b_bs", "b_bp",  "b_olc", "b_olh"};
    return v;
}

const std::vector<std::string>& tps_variables() {
    static const std::vector<std::string> v{"w", "x", "y", "z"};
    return v;
}

const std::vector<std::string>& p_variables() {
    static const std::vector<std::string> v{"b_bs", "b_bp", "b_olc", "b_olh"};
    return v;
}

HalfPoly var(const std::string& name) {
    return HalfPoly::variable(name);
}

HalfPoly rename(const HalfPoly& p, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::map<std::string, HalfPoly> b;
    for (const auto& [from, to] : pairs) b.emplace(from, var(to));
    return p.substitute(b);
}

HalfPoly f_coefficient(EdgeClass c) {
    const auto& u = universal_variables();
    switch (c) {
    case EdgeClass::bs: return unit_monomial(u, {{kAbs, 2}});
    case EdgeClass::bp: return unit_monomial(u, {{kAbp, 2}});
    case EdgeClass::olc: return unit_monomial(u, {{kAolc, 2}});
    case EdgeClass::olh: return unit_monomial(u, {{kAolh, 2}});
    case EdgeClass::nl: return unit_monomial(u, {{kAbp, 1}, {kAolh, 1}});
    }
    throw std::logic_error("bad edge class");
}

HalfPoly g_coefficient(EdgeClass c) {
    const auto& u = universal_variables();
    switch (c) {
    case EdgeClass::bs: return unit_monomial(u, {{kBbs, 2}});
    case EdgeClass::bp: return unit_monomial(u, {{kBbp, 2}});
    case EdgeClass::olc: return unit_monomial(u, {{kBolc, 2}});
    case EdgeClass::olh: return unit_monomial(u, {{kBolh, 2}});
    case EdgeClass::nl: return unit_monomial(u, {{kBbp, 1}, {kBolh, 1}});
    }
    throw std::logic_error("bad edge class");
}

HalfPoly p_coefficient(EdgeClass c) {
    const auto& p = p_variables();
    switch (c) {
    case EdgeClass::bs: return unit_monomial(p, {{0, 2}});
    case EdgeClass::bp: return unit_monomial(p, {{1, 2}});
    case EdgeClass::olc: return unit_monomial(p, {{2, 2}});
    case EdgeClass::olh: return unit_monomial(p, {{3, 2}});
    case EdgeClass::nl: return unit_monomial(p, {{1, 1}, {3, 1}});
    }
    throw std::logic_error("bad edge class");
}

HalfPoly universal_U_state_sum(const ColouredRibbonGraph& cg) {
    const RibbonGraph& g = cg.graph();
    RankContext ctx(cg);
    const EdgeMask all = g.all_edges();
    const RankProfile top = ctx.profile(all);
    const int k1 = components(ctx.vertex_quotient()), k3 = components(ctx.boundary_quotient());
    const int v = g.vertex_count();
    Accumulator acc(universal_variables());
    for_each_subset(all, [&](EdgeMask a) {
        RankProfile r = ctx.profile(a);
        HalfPoly::Exponents e(kUCount, 0);
        e[kAlpha] = 2 * k1 + 2 * top.r1 - 2 * r.r1;
        e[kBeta] = 2 * k3 + 2 * r.r3;
        e[kGamma] = 2 * v - 2 * r.r1 - r.r2.twice + 2 * r.r3 + r.r4.twice;
        e[kAbs] = 2 * (top.r1 - r.r1);
        e[kAbp] = top.r2.twice - r.r2.twice;
        e[kAolc] = 2 * (top.r3 - r.r3);
        e[kAolh] = top.r4.twice - r.r4.twice;
        e[kBbs] = 2 * r.r1;
        e[kBbp] = r.r2.twice;
        e[kBolc] = 2 * r.r3;
        e[kBolh] = r.r4.twice;
        acc.add(e);
    });
    return acc.result();
}

namespace {

HalfPoly edgeless_U(const ColouredRibbonGraph& cg) {
    return unit_monomial(universal_variables(), {{kAlpha, 2 * class_count(cg.vclass())},
                                                 {kBeta, 2 * class_count(cg.bclass())},
                                                 {kGamma, 2 * cg.graph().vertex_count()}});
}

HalfPoly recursive_U(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, std::size_t next) {
    if (next == order.size()) {
        if (cg.graph().edge_count() != 0) throw RibbonError("edge order does not list every edge");
        return edgeless_U(cg);
    }
    EdgeId e = order[next];
    EdgeType t = edge_type(cg, e);
    HalfPoly out = f_coefficient(t.contract_class) * recursive_U(delete_coloured(cg, e), order, next + 1);
    out += g_coefficient(t.delete_class) * recursive_U(contract_coloured(cg, e), order, next + 1);
    return out;
}

HalfPoly recursive_P(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, std::size_t next) {
    if (next == order.size()) {
        if (cg.graph().edge_count() != 0) throw RibbonError("edge order does not list every edge");
        return HalfPoly::constant(1).over(p_variables());
    }
    EdgeId e = order[next];
    EdgeType t = edge_type(cg, e);
    HalfPoly out = recursive_P(delete_coloured(cg, e), order, next + 1);
    out += p_coefficient(t.delete_class) * recursive_P(contract_coloured(cg, e), order, next + 1);
    return out;
}

} // namespace

HalfPoly universal_U_recursive(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order) {
    return recursive_U(cg, order, 0).over(universal_variables());
}

HalfPoly p_recursive(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order) {
    return recursive_P(cg, order, 0).over(p_variables());
}

HalfPoly t_ps(const ColouredRibbonGraph& cg) {
    RankContext ctx(cg);
    const EdgeMask all = cg.graph().all_edges();
    const RankProfile top = ctx.profile(all);
    Accumulator acc(tps_variables());
    for_each_subset(all, [&](EdgeMask a) {
        RankProfile r = ctx.profile(a);
        acc.add({2 * (top.r1 - r.r1), top.r2.twice - r.r2.twice, 2 * r.r3, r.r4.twice});
    });
    return acc.result();
}

HalfPoly t_s(const ColouredRibbonGraph& cg) {
    RankContext ctx(cg);
    const EdgeMask all = cg.graph().all_edges();
    const RankProfile top = ctx.profile(all);
    Accumulator acc({"x", "y", "z"});
    for_each_subset(all, [&](EdgeMask a) {
        RankProfile r = ctx.profile(a);
        acc.add({top.rho.twice - r.rho.twice, 2 * r.r3, r.r4.twice});
    });
    return acc.result();
}

HalfPoly t_cps(const ColouredRibbonGraph& cg) {
    RankContext ctx(cg);
    const EdgeMask all = cg.graph().all_edges();
    const RankProfile top = ctx.profile(all);
    Accumulator acc({"w", "x", "y"});
    for_each_subset(all, [&](EdgeMask a) {
        RankProfile r = ctx.profile(a);
        acc.add({2 * (top.r1 - r.r1), top.r2.twice - r.r2.twice, 2 * std::popcount(a) - r.rho.twice});
    });
    return acc.result();
}

HalfPoly t_cs(const RibbonGraph& g) {
    const EdgeMask all = g.all_edges();
    const Half top = rho(g, all);
    Accumulator acc({"x", "y"});
    for_each_subset(all, [&](EdgeMask a) {
        Half r = rho(g, a);
        acc.add({top.twice - r.twice, 2 * std::popcount(a) - r.twice});
    });
    return acc.result();
}

HalfPoly p_normalized(const ColouredRibbonGraph& cg) {
    RankContext ctx(cg);
    Accumulator acc(p_variables());
    for_each_subset(cg.graph().all_edges(), [&](EdgeMask a) {
        RankProfile r = ctx.profile(a);
        acc.add({2 * r.r1, r.r2.twice, 2 * r.r3, r.r4.twice});
    });
    return acc.result();
}

HalfPoly bollobas_riordan(const RibbonGraph& g) {
    return bollobas_riordan(g, discrete_partition(g.vertex_count()));
}

HalfPoly bollobas_riordan(const RibbonGraph& g, const Partition& vclass) {
    ColouredRibbonGraph cg(g, vclass, discrete_partition(g.boundary_count()));
    MultiGraph gv = quotient_vertex_graph(cg);
    const EdgeMask all = g.all_edges();
    const int top = rank(gv, all);
    // (x-1)^i y^j z^k collected by (i, j, k)
    std::map<std::tuple<int, int, int>, Integer> counts;
    for_each_subset(all, [&](EdgeMask a) {
        int r = rank(gv, a);
        Half rh = rho(g, a);
        counts[{top - r, std::popcount(a) - r, rh.twice - 2 * r}] += 1;
    });
    const std::vector<std::string> vars{"x", "y", "z"};
    HalfPoly xm1 = var("x") - HalfPoly::constant(1);
    HalfPoly out(vars);
    for (const auto& [k, c] : counts) {
        auto [i, j, l] = k;
        out += HalfPoly::constant(c) * xm1.pow(i) * HalfPoly::monomial(vars, {0, 2 * j, 2 * l});
    }
    return out.over(vars);
}

HalfPoly krushkal(const ColouredRibbonGraph& cg, int ambient_euler_genus) {
    if (class_count(cg.vclass()) != cg.graph().vertex_count())
        throw RibbonError("krushkal needs every vertex in its own class (a graph in a surface)");
    const std::vector<std::string> vars{"x", "y", "a", "b"};
    HalfPoly t = t_ps(cg).substitute({{"w", var("x")},
                                      {"x", HalfPoly::variable("a", -2)},
                                      {"y", var("y")},
                                      {"z", HalfPoly::variable("b", -2)}});
    Half r2 = rank_profile(cg, cg.graph().all_edges()).r2;
    t *= HalfPoly::monomial(vars, {0, 0, r2.twice, ambient_euler_genus});
    return t.over(vars);
}

HalfPoly universal_U_closed_form(const ColouredRibbonGraph& cg) {
    const auto& u = universal_variables();
    RankContext ctx(cg);
    const RankProfile top = ctx.profile(cg.graph().all_edges());
    const int k1 = components(ctx.vertex_quotient()), k3 = components(ctx.boundary_quotient());
    HalfPoly pre = unit_monomial(u, {{kAlpha, 2 * k1},
                                     {kBeta, 2 * k3},
                                     {kGamma, 2 * cg.graph().vertex_count() - top.rho.twice},
                                     {kBbs, 2 * top.r1},
                                     {kBbp, top.r2.twice},
                                     {kAolc, 2 * top.r3},
                                     {kAolh, top.r4.twice}});
    HalfPoly t = t_ps(cg).substitute({
        {"w", unit_monomial(u, {{kAlpha, 2}, {kGamma, 2}, {kAbs, 2}, {kBbs, -2}})},
        {"x", unit_monomial(u, {{kGamma, 2}, {kAbp, 2}, {kBbp, -2}})},
        {"y", unit_monomial(u, {{kBeta, 2}, {kGamma, 2}, {kBolc, 2}, {kAolc, -2}})},
        {"z", unit_monomial(u, {{kGamma, 2}, {kBolh, 2}, {kAolh, -2}})},
    });
    return (pre * t).over(u);
}

bool check_duality(const ColouredRibbonGraph& cg) {
    ColouredRibbonGraph d = dual_coloured(cg);
    bool ok = t_ps(d) == rename(t_ps(cg), {{"w", "y"}, {"x", "z"}, {"y", "w"}, {"z", "x"}});
    ok = ok && t_s(cg) == rename(t_cps(d), {{"w", "y"}, {"x", "z"}, {"y", "x"}});
    ok = ok && t_cps(cg) == rename(t_s(d), {{"x", "y"}, {"y", "w"}, {"z", "x"}});
    return ok;
}

} // namespace ribbon
