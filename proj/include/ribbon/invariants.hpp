#pragma once

#include "ribbon/coloured.hpp"
#include "ribbon/half.hpp"

#include <string>

namespace ribbon {

// The five one-edge coloured ribbon graphs:
//   bs  non-loop, endpoints in separate vertex classes
//   bp  non-loop, endpoints in the same vertex class
//   olc orientable loop, its two boundary components in different classes
//   olh orientable loop, both boundary components in one class
//   nl  non-orientable loop
enum class EdgeClass { bs, bp, olc, olh, nl };
std::string to_string(EdgeClass c);

struct EdgeType {
    EdgeClass contract_class; // class of G/e^c
    EdgeClass delete_class;   // class of G\e^c
    friend bool operator==(const EdgeType&, const EdgeType&) = default;
};

enum class LoopKind { not_loop, orientable_loop, nonorientable_loop };
enum class DoopKind { not_doop, orientable_doop, nonorientable_doop };

LoopKind loop_kind(const RibbonGraph& g, EdgeId e);
DoopKind is_doop(const RibbonGraph& g, EdgeId e);

struct RankProfile {
    int r1 = 0;
    Half r2;
    int r3 = 0;
    Half r4;
    Half rho;
    friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

// Precomputes the two quotient graphs so that many subsets are cheap.
class RankContext {
public:
    explicit RankContext(const ColouredRibbonGraph& cg);
    RankProfile profile(EdgeMask a) const;
    const MultiGraph& vertex_quotient() const { return gv_; }
    const MultiGraph& boundary_quotient() const { return gb_; }

private:
    const ColouredRibbonGraph* cg_;
    MultiGraph gv_, gb_;
    EdgeMask all_;
    int rb_all_;
};

RankProfile rank_profile(const ColouredRibbonGraph& cg, EdgeMask a);

// Classification from loop/doop status and the quotient graphs.
EdgeType edge_type(const ColouredRibbonGraph& cg, EdgeId e);
// Classification by building G/e^c and G\e^c explicitly.
EdgeType edge_type_direct(const ColouredRibbonGraph& cg, EdgeId e);

// Removes isolated vertices together with their boundary circles.
ColouredRibbonGraph drop_isolated(const ColouredRibbonGraph& cg);
// Class of a coloured ribbon graph with exactly one edge and no isolated vertex.
EdgeClass classify_one_edge(const ColouredRibbonGraph& cg);

} // namespace ribbon
