#include "doctest.h"

#include "oracles.hpp"
#include "ribbon/invariants.hpp"
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

void check_profile(const RankProfile& got, int r1x2, int r2x2, int r3x2, int r4x2, int rhox2) {
    CHECK(2 * got.r1 == r1x2);
    CHECK(got.r2.twice == r2x2);
    CHECK(2 * got.r3 == r3x2);
    CHECK(got.r4.twice == r4x2);
    CHECK(got.rho.twice == rhox2);
}

// The one-edge graphs, coloured to realise each class.
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

} // namespace

TEST_CASE("rank profile examples") {
    check_profile(rank_profile(ColouredRibbonGraph(L1n()), 1), 0, 1, 0, 1, 1);
    check_profile(rank_profile(ColouredRibbonGraph(B1()), 0), 0, 0, 0, 0, 0);
    check_profile(rank_profile(ColouredRibbonGraph(ThetaT()), 1), 0, 0, 0, 2, 0);
}

TEST_CASE("rank profiles agree with the defining formulas") {
    for (const ColouredRibbonGraph& cg : corpus(51, 250)) {
        RankContext ctx(cg);
        for (EdgeMask a = 0; a <= cg.graph().all_edges(); ++a) {
            oracle::Profile2 ref = oracle::profile(cg, a);
            RankProfile got = ctx.profile(a);
            check_profile(got, ref.r1x2, ref.r2x2, ref.r3x2, ref.r4x2, ref.rhox2);
            CHECK(got == rank_profile(cg, a));
            CHECK(got.r1 >= 0);
            CHECK(got.r3 >= 0);
            CHECK(got.r2.twice >= 0);
            CHECK(got.r4.twice >= 0);
        }
    }
}

TEST_CASE("doops") {
    CHECK(is_doop(B1(), 1) == DoopKind::orientable_doop);
    CHECK(is_doop(L1o(), 1) == DoopKind::not_doop);
    CHECK(is_doop(L1n(), 1) == DoopKind::nonorientable_doop);
    for (const ColouredRibbonGraph& cg : corpus(52, 200)) {
        const RibbonGraph& g = cg.graph();
        RibbonGraph d = geometric_dual(g);
        for (EdgeId e : g.edge_ids()) {
            LoopKind lk = loop_kind(d, e);
            DoopKind dk = is_doop(g, e);
            CHECK(static_cast<int>(lk) == static_cast<int>(dk));
            // a doop is an edge with the same boundary circle on both sides
            auto [l, r] = g.side_faces(g.position_of(e));
            CHECK((dk != DoopKind::not_doop) == (l == r));
        }
    }
}

TEST_CASE("one-edge classification") {
    for (EdgeClass c : {EdgeClass::bs, EdgeClass::bp, EdgeClass::olc, EdgeClass::olh, EdgeClass::nl})
        CHECK(classify_one_edge(one_edge(c)) == c);
    CHECK(to_string(EdgeClass::olh) == "olh");
}

TEST_CASE("edge type examples") {
    CHECK(edge_type(ColouredRibbonGraph(B1()), 1) == EdgeType{EdgeClass::bs, EdgeClass::bs});
    CHECK(edge_type(ColouredRibbonGraph(L1n()), 1) == EdgeType{EdgeClass::nl, EdgeClass::nl});
    // merged endpoint classes: contracting everything else leaves the edge
    // joining one class, so both sides read bp
    ColouredRibbonGraph merged(B1(), single_class(2), discrete_partition(1));
    CHECK(edge_type(merged, 1) == EdgeType{EdgeClass::bp, EdgeClass::bp});
    CHECK(edge_type_direct(merged, 1) == EdgeType{EdgeClass::bp, EdgeClass::bp});
    ColouredRibbonGraph theta(ThetaT(), discrete_partition(1), single_class(1));
    CHECK(edge_type(theta, 2) == EdgeType{EdgeClass::bp, EdgeClass::olh});
}

TEST_CASE("edge type by criteria equals the direct computation") {
    for (const ColouredRibbonGraph& cg : corpus(53, 300)) {
        for (EdgeId e : cg.graph().edge_ids()) {
            EdgeType t = edge_type(cg, e);
            CHECK(t == edge_type_direct(cg, e));
            // realisability: a loop of G is a loop of G/V, so never a bs delete class
            if (loop_kind(cg.graph(), e) != LoopKind::not_loop) CHECK(t.delete_class != EdgeClass::bs);
            // a doop never contracts to an orientable loop class
            if (is_doop(cg.graph(), e) != DoopKind::not_doop) {
                CHECK(t.contract_class != EdgeClass::olc);
                CHECK(t.contract_class != EdgeClass::olh);
            }
            // nl comes exactly from non-orientable loops (deletion) and doops (contraction)
            CHECK((t.delete_class == EdgeClass::nl) == (loop_kind(cg.graph(), e) == LoopKind::nonorientable_loop));
            CHECK((t.contract_class == EdgeClass::nl) == (is_doop(cg.graph(), e) == DoopKind::nonorientable_doop));
        }
    }
}

TEST_CASE("dropping isolated vertices") {
    ColouredRibbonGraph d = drop_isolated(ColouredRibbonGraph(disjoint_union(L1o(), oracle::point())));
    CHECK(d.graph().vertex_count() == 1);
    CHECK(d.graph().boundary_count() == 2);
}
