#include "doctest.h"

#include "oracles.hpp"
#include "ribbon/evaluators.hpp"
#include "ribbon/random.hpp"

using namespace ribbon;
using oracle::B1;
using oracle::L1n;
using oracle::L1o;
using oracle::ThetaT;

namespace {

std::vector<ColouredRibbonGraph> corpus(std::uint64_t seed, int n, int v_max = 3, int e_max = 5) {
    std::vector<ColouredRibbonGraph> out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) out.push_back(random_coloured_ribbon_graph(rng(), v_max, e_max));
    return out;
}

HalfPoly P(const std::string& s) {
    return HalfPoly::parse(s);
}

ColouredRibbonGraph one_edge(EdgeClass c) {
    switch (c) {
    case EdgeClass::bs: return ColouredRibbonGraph(B1());
    case EdgeClass::bp: return ColouredRibbonGraph(B1(), single_class(2), discrete_partition(1));
    case EdgeClass::olc: return ColouredRibbonGraph(L1o());
    case EdgeClass::olh: return ColouredRibbonGraph(L1o(), discrete_partition(1), single_class(2));
    case EdgeClass::nl: return ColouredRibbonGraph(L1n());
    }
    return {};
}

// R(x,y,z) = sum (x-1)^{r(E)-r(A)} y^{|A|-r(A)} z^{gamma(A)}
HalfPoly br_oracle(const RibbonGraph& g) {
    const EdgeMask all = g.all_edges();
    const int rE = g.vertex_count() - oracle::vertex_components(g, all);
    HalfPoly sum({"x", "y", "z"});
    const HalfPoly xm1 = HalfPoly::variable("x") - HalfPoly::constant(1);
    for (EdgeMask a = 0; a <= all; ++a) {
        const int k = oracle::vertex_components(g, a), r = g.vertex_count() - k, size = std::popcount(a);
        const int gamma = 2 * k - g.vertex_count() + size - oracle::faces(g, a);
        sum += xm1.pow(rE - r) * HalfPoly::monomial({"y", "z"}, {2 * (size - r), 2 * gamma});
    }
    return sum;
}

} // namespace

TEST_CASE("one-edge closed forms of T_ps") {
    CHECK(t_ps(one_edge(EdgeClass::bs)) == P("w + 1"));
    CHECK(t_ps(one_edge(EdgeClass::bp)) == P("x + 1"));
    CHECK(t_ps(one_edge(EdgeClass::olc)) == P("y + 1"));
    CHECK(t_ps(one_edge(EdgeClass::olh)) == P("z + 1"));
    CHECK(t_ps(one_edge(EdgeClass::nl)) == P("x^(1/2) + z^(1/2)"));
    CHECK(t_ps(ColouredRibbonGraph(oracle::point())) == P("1"));
}

TEST_CASE("T_ps of the theta graph with one boundary class") {
    ColouredRibbonGraph theta(ThetaT(), discrete_partition(1), single_class(1));
    // r2(E) = 1 so the x exponent is 1 - r2(A): 1 for A = {}, {e}, {f}, 0 for E
    CHECK(t_ps(theta) == P("x + 2*x*z + z"));
    CHECK(t_ps(theta) == oracle::tps(theta));
}

TEST_CASE("state sums agree with the reference on random graphs") {
    for (const ColouredRibbonGraph& cg : corpus(61, 200)) {
        CHECK(t_ps(cg) == oracle::tps(cg));
        CHECK(p_normalized(cg) == oracle::p(cg));
    }
}

TEST_CASE("T_s, T_cps, T_cs examples") {
    CHECK(t_cs(B1()) == P("x + 1"));
    CHECK(t_cs(L1o()) == P("y + 1"));
    CHECK(t_cs(L1n()) == P("x^(1/2) + y^(1/2)"));
    CHECK(t_cs(ThetaT()) == P("x + 2*x*y + y"));
    CHECK(t_cps(ColouredRibbonGraph(L1o())) == P("1 + y"));
}

TEST_CASE("hierarchy collapses") {
    const HalfPoly x = HalfPoly::variable("x"), y = HalfPoly::variable("y"), z = HalfPoly::variable("z");
    for (const ColouredRibbonGraph& cg : corpus(62, 200)) {
        const HalfPoly tps = t_ps(cg);
        const HalfPoly ts = t_s(cg), tcps = t_cps(cg), tcs = t_cs(cg.graph());
        CHECK(tps.substitute({{"w", x}}) == ts);
        CHECK(tps.substitute({{"z", y}}) == tcps);
        // r1 + r2 = rho and r3 + r4 = |A| - rho whatever the colouring
        CHECK(ts.substitute({{"z", y}}) == tcs);
        CHECK(tcps.substitute({{"w", x}, {"z", y}}) == tcs);
    }
}

TEST_CASE("one-edge P values and the theta graph") {
    CHECK(p_normalized(one_edge(EdgeClass::bs)) == P("1 + b_bs"));
    CHECK(p_normalized(one_edge(EdgeClass::nl)) == P("1 + b_bp^(1/2)*b_olh^(1/2)"));
    ColouredRibbonGraph theta(ThetaT(), discrete_partition(1), single_class(1));
    CHECK(p_normalized(theta) == P("1 + 2*b_olh + b_bp*b_olh"));
    CHECK(p_recursive(theta, {1, 2}) == p_normalized(theta));
    CHECK(p_recursive(theta, {2, 1}) == p_normalized(theta));
}

TEST_CASE("universal invariant U") {
    // edgeless: alpha^n beta^m gamma^v
    RibbonGraph three = disjoint_union(disjoint_union(oracle::point(), oracle::point()), oracle::point());
    ColouredRibbonGraph pts(three, Partition{0, 0, 1}, Partition{0, 0, 0});
    CHECK(universal_U_state_sum(pts) == P("alpha^2*beta*gamma^3"));
    CHECK(universal_U_recursive(pts, {}) == P("alpha^2*beta*gamma^3"));

    // bs edge: deleting leaves two points in two vertex classes whose circles
    // share the class of the old circle; contracting leaves one point
    ColouredRibbonGraph bs = one_edge(EdgeClass::bs);
    CHECK(universal_U_state_sum(bs) == P("a_bs*alpha^2*beta*gamma^2 + b_bs*alpha*beta*gamma"));
    CHECK(universal_U_recursive(bs, {1}) == universal_U_state_sum(bs));

    ColouredRibbonGraph nl = one_edge(EdgeClass::nl);
    CHECK(universal_U_recursive(nl, {1}) ==
          P("a_bp^(1/2)*a_olh^(1/2)*alpha*beta*gamma + b_bp^(1/2)*b_olh^(1/2)*alpha*beta*gamma"));
    CHECK(universal_U_state_sum(nl) == universal_U_recursive(nl, {1}));

    ColouredRibbonGraph theta(ThetaT());
    CHECK(universal_U_recursive(theta, {1, 2}) == universal_U_recursive(theta, {2, 1}));

    // specialising U to the P ring gives P
    std::map<std::string, HalfPoly> one;
    for (const char* v : {"alpha", "beta", "gamma", "a_bs", "a_bp", "a_olc", "a_olh"})
        one.emplace(v, HalfPoly::constant(1));
    for (const ColouredRibbonGraph& cg : corpus(63, 120, 3, 4)) {
        const HalfPoly u = universal_U_state_sum(cg);
        std::vector<EdgeId> order = cg.graph().edge_ids();
        CHECK(u == universal_U_recursive(cg, order));
        std::reverse(order.begin(), order.end());
        CHECK(u == universal_U_recursive(cg, order));
        CHECK(u == universal_U_closed_form(cg));
        CHECK(u.substitute(one) == p_normalized(cg));
    }
}

TEST_CASE("recursion coefficients") {
    CHECK(f_coefficient(EdgeClass::nl) == P("a_bp^(1/2)*a_olh^(1/2)"));
    CHECK(g_coefficient(EdgeClass::olc) == P("b_olc"));
    CHECK(p_coefficient(EdgeClass::nl) == P("b_bp^(1/2)*b_olh^(1/2)"));
    CHECK_THROWS(universal_U_recursive(ColouredRibbonGraph(ThetaT()), {1}));
}

TEST_CASE("duality of T_ps and the cross-dualities") {
    CHECK(check_duality(one_edge(EdgeClass::bs)));
    CHECK(t_ps(dual_coloured(one_edge(EdgeClass::bs))) == P("y + 1"));
    CHECK(check_duality(one_edge(EdgeClass::nl)));
    for (const ColouredRibbonGraph& cg : corpus(64, 200)) {
        CHECK(check_duality(cg));
        HalfPoly swapped = t_ps(cg).substitute({{"w", HalfPoly::variable("y")},
                                                {"x", HalfPoly::variable("z")},
                                                {"y", HalfPoly::variable("w")},
                                                {"z", HalfPoly::variable("x")}});
        CHECK(t_ps(dual_coloured(cg)) == swapped);
    }
}

TEST_CASE("genus-zero reduction to the classical Tutte polynomial") {
    const HalfPoly one = HalfPoly::constant(1);
    int plane = 0;
    for (const ColouredRibbonGraph& cg : corpus(65, 400, 3, 5)) {
        const RibbonGraph& g = cg.graph();
        if (euler_genus(g) != 0) continue;
        ++plane;
        HalfPoly shifted = t_cs(g).substitute(
            {{"x", HalfPoly::variable("x") - one}, {"y", HalfPoly::variable("y") - one}});
        std::vector<std::pair<int, int>> edges;
        for (int p = 0; p < g.edge_count(); ++p) edges.push_back(g.endpoints(p));
        CHECK(shifted == oracle::tutte(g.vertex_count(), edges));
        // plane duality
        CHECK(t_cs(geometric_dual(g)) ==
              t_cs(g).substitute({{"x", HalfPoly::variable("y")}, {"y", HalfPoly::variable("x")}}));
    }
    CHECK(plane > 50);
}

TEST_CASE("Bollobas-Riordan polynomial") {
    CHECK(bollobas_riordan(ThetaT()) == P("1 + 2*y + y^2*z^2"));
    CHECK(bollobas_riordan(B1()) == P("x"));
    CHECK(bollobas_riordan(L1n()) == P("1 + y*z"));
    const HalfPoly x = HalfPoly::variable("x"), y = HalfPoly::variable("y");
    for (const ColouredRibbonGraph& cg : corpus(66, 200, 3, 5)) {
        const RibbonGraph& g = cg.graph();
        CHECK(bollobas_riordan(g) == br_oracle(g));
        CHECK(bollobas_riordan(g, discrete_partition(g.vertex_count())) == bollobas_riordan(g));
        // R = (y z^2)^{gamma/2} T_cps(x - 1, 1/(y z^2), y) with discrete vertex classes
        ColouredRibbonGraph plain(g);
        const int gamma = euler_genus(g);
        HalfPoly rhs = HalfPoly::monomial({"y", "z"}, {gamma, 2 * gamma}) *
                       t_cps(plain).substitute({{"w", x - HalfPoly::constant(1)},
                                                {"x", HalfPoly::monomial({"y", "z"}, {-2, -4})},
                                                {"y", y}});
        CHECK(bollobas_riordan(g) == rhs);
    }
}

TEST_CASE("Krushkal polynomial spot values") {
    CHECK(krushkal(one_edge(EdgeClass::bs), 0) == P("x + 1"));
    CHECK(krushkal(ColouredRibbonGraph(L1o()), 0) == P("y + 1"));
    CHECK(krushkal(one_edge(EdgeClass::olh), 2) == P("b + 1"));
    CHECK_THROWS(krushkal(one_edge(EdgeClass::bp), 0));
}
