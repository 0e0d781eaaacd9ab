#pragma once

#include "ribbon/ribbon_graph.hpp"

#include <vector>

namespace ribbon {

// A partition stored as a class label per element, normalised so labels
// appear in order of first occurrence (0,1,...).
using Partition = std::vector<int>;

Partition normalise(const std::vector<int>& labels);
Partition discrete_partition(int n);
Partition single_class(int n);
int class_count(const Partition& p);
// blocks as sorted 0-based element lists, ordered by least element
std::vector<std::vector<int>> blocks(const Partition& p);
Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks); // throws on non-partition

class ColouredRibbonGraph {
public:
    ColouredRibbonGraph() = default;
    explicit ColouredRibbonGraph(RibbonGraph g); // discrete colourings
    ColouredRibbonGraph(RibbonGraph g, Partition vclass, Partition bclass);

    const RibbonGraph& graph() const { return graph_; }
    const Partition& vclass() const { return vclass_; }
    const Partition& bclass() const { return bclass_; }

    friend bool operator==(const ColouredRibbonGraph&, const ColouredRibbonGraph&) = default;

private:
    RibbonGraph graph_;
    Partition vclass_;
    Partition bclass_;
};

ColouredRibbonGraph delete_coloured(const ColouredRibbonGraph& cg, EdgeId e);
ColouredRibbonGraph contract_coloured(const ColouredRibbonGraph& cg, EdgeId e);
ColouredRibbonGraph dual_coloured(const ColouredRibbonGraph& cg);
// h's ids shifted as in disjoint_union; colour classes kept apart
ColouredRibbonGraph disjoint_union(const ColouredRibbonGraph& g, const ColouredRibbonGraph& h);
// One-point join; the classes of the two joined vertices merge, as do the
// classes of the two boundary components that the join fuses.
ColouredRibbonGraph join_at(const ColouredRibbonGraph& g, int vg, const ColouredRibbonGraph& h, int vh,
                            int arc_g = -1, int arc_h = 0);

// G/V: a node per vertex class, an edge per ribbon edge.
MultiGraph quotient_vertex_graph(const ColouredRibbonGraph& cg);
// G*/B: a node per boundary class, each edge joining the classes of the
// boundary components along its two sides.
MultiGraph quotient_boundary_graph(const ColouredRibbonGraph& cg);

// Equivalence of coloured ribbon graphs (labelled edges, anonymous colours).
bool equivalent(const ColouredRibbonGraph& a, const ColouredRibbonGraph& b);

} // namespace ribbon
