#pragma once

#include "ribbon/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ribbon {

using EdgeId = int;
// Subsets of edges are bitmasks over edge *positions* (index into the sorted
// edge list), not over ids.
using EdgeMask = std::uint64_t;

struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeId> ids; // parallel to edges

    MultiGraph() = default;
    MultiGraph(int vertices, std::vector<std::pair<int, int>> edge_list);
    MultiGraph(int vertices, std::vector<std::pair<int, int>> edge_list, std::vector<EdgeId> edge_ids);

    int edge_count() const { return static_cast<int>(edges.size()); }
    EdgeMask all_edges() const;
    int position_of(EdgeId id) const; // -1 if absent
};

int components(const MultiGraph& g, EdgeMask a);
int rank(const MultiGraph& g, EdgeMask a);
inline int components(const MultiGraph& g) { return components(g, g.all_edges()); }
inline int rank(const MultiGraph& g) { return rank(g, g.all_edges()); }
bool is_loop(const MultiGraph& g, int pos);
bool is_bridge(const MultiGraph& g, int pos);

MultiGraph delete_edge(const MultiGraph& g, int pos);
// Merges the endpoints (a loop is simply removed); the vertex with the larger
// index disappears and later vertices shift down.
MultiGraph contract_edge(const MultiGraph& g, int pos);

// Isomorphism fixing every edge id (vertices may be renamed).
bool same_up_to_vertex_names(const MultiGraph& a, const MultiGraph& b);

// Classical Tutte polynomial in x,y via the subset expansion.
HalfPoly tutte_classical(const MultiGraph& g);

// Universal deletion-contraction invariant in x,y,a,b,gamma (lowest position
// edge first): bridge -> x U(G/e), loop -> y U(G\e), else a U(G\e) + b U(G/e),
// edgeless -> gamma^n.
HalfPoly universal_graph_U(const MultiGraph& g);

} // namespace ribbon
