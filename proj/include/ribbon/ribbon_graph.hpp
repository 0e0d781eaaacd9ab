#pragma once

#include "ribbon/half.hpp"
#include "ribbon/multigraph.hpp"

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon {

class RibbonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HalfEdge {
    EdgeId edge = 0;
    int end = 1; // 1 or 2
    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

enum class Side { left = 0, right = 1 };

struct SideFlag {
    EdgeId edge = 0;
    int end = 1;
    Side side = Side::left;
    friend auto operator<=>(const SideFlag&, const SideFlag&) = default;
};

std::string to_string(const HalfEdge& h);
std::string to_string(const SideFlag& f);

// Plain rotation-system description: the external, human-facing form.
struct RotationSystem {
    std::vector<EdgeId> edges;                   // edge ids present
    std::vector<std::vector<HalfEdge>> vertices; // cyclic rotations
    std::set<EdgeId> twisted;
    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

    // edges 1..m
    static RotationSystem with_edges(int m, std::vector<std::vector<HalfEdge>> vertices, std::set<EdgeId> twisted = {});
};

// First violated invariant, or nullopt.
std::optional<std::string> validate(const RotationSystem& rs);

struct BoundaryComponent {
    int index = 0;                 // 1-based canonical index
    std::vector<SideFlag> flags;   // cyclic walk; empty for an isolated vertex
    std::vector<int> host_vertices;
};

class RibbonGraph;

// Result of a minor operation, with the bookkeeping needed to carry colours.
struct MinorResult;

// Immutable ribbon graph.  Internally a graph-encoded map: 4 corner flags per
// edge (two per half-edge) and three fixed-point-free involutions
//   a0  across the edge, along one side,
//   a1  along a vertex boundary arc between consecutive half-edges,
//   a2  across a half-edge, between its two sides.
// Vertices are <a1,a2>-orbits, boundary components <a0,a1>-orbits, edges
// <a0,a2>-orbits.  Isolated vertices have no flags and are kept explicitly.
class RibbonGraph {
public:
    RibbonGraph() = default;
    explicit RibbonGraph(const RotationSystem& rs);

    int vertex_count() const { return static_cast<int>(start_.size()); }
    int edge_count() const { return static_cast<int>(labels_.size()); }
    int boundary_count() const { return face_count_; }
    const std::vector<EdgeId>& edge_ids() const { return labels_; }
    int position_of(EdgeId e) const; // -1 if absent
    int require_position(EdgeId e) const;
    EdgeMask all_edges() const;
    EdgeMask mask_of(const std::vector<EdgeId>& ids) const;

    RotationSystem rotation_system() const;
    std::vector<HalfEdge> rotation(int v) const;
    bool is_twisted(int pos) const;
    bool is_isolated(int v) const { return start_[v] < 0; }
    int isolated_vertex_count() const;
    // vertices of end 1 and end 2
    std::pair<int, int> endpoints(int pos) const;
    // boundary components (0-based canonical) running along the two sides
    std::pair<int, int> side_faces(int pos) const;

    std::vector<BoundaryComponent> boundary_components() const;
    int components() const { return components_; }

    // b(A) for the spanning ribbon subgraph (V, A).
    int boundary_count(EdgeMask a) const;
    // components of the spanning subgraph (V, A)
    int components(EdgeMask a) const;

    // Flag-level access (used by colour transport and tests).
    int flag_count() const { return static_cast<int>(a0_.size()); }
    int alpha0(int x) const { return a0_[x]; }
    int alpha1(int x) const { return a1_[x]; }
    int alpha2(int x) const { return a2_[x]; }
    int vertex_of_flag(int x) const { return vertex_of_flag_[x]; }
    int face_of_flag(int x) const { return face_of_flag_[x]; }
    bool flag_is_prev(int x) const { return prev_[x]; }
    SideFlag side_flag(int x) const;
    int flag_of(const SideFlag& f) const; // -1 if absent
    int end_of_flag(int x) const;
    // 0-based canonical face of an isolated vertex's flagless boundary
    int face_of_isolated_vertex(int v) const { return isolated_face_[v]; }
    // vertex hosting a flagless face, or -1 if the face has flags
    int isolated_vertex_of_face(int f) const;

    MinorResult delete_edge_tracked(EdgeId e) const;
    MinorResult contract_edge_tracked(EdgeId e) const;
    MinorResult partial_dual_tracked(EdgeMask a) const;
    RibbonGraph geometric_dual() const;

    // Representation equality (same ids, rotations with canonical starts,
    // twists, vertex order).
    friend bool operator==(const RibbonGraph& a, const RibbonGraph& b);

private:
    RibbonGraph(std::vector<EdgeId> labels, std::vector<int> a0, std::vector<int> a1, std::vector<int> a2,
                std::vector<int> start);
    void derive();

    std::vector<EdgeId> labels_;
    std::vector<int> a0_, a1_, a2_;
    std::vector<int> start_; // per vertex: a corner flag read as "prev" with a2 first, or -1

    // derived
    std::vector<int> vertex_of_flag_;
    std::vector<bool> prev_;
    std::vector<int> face_of_flag_;
    std::vector<std::vector<int>> face_walk_; // flagged faces in canonical order
    std::vector<int> isolated_face_;
    std::vector<int> face_vertex_; // per face: isolated host vertex or -1
    int face_count_ = 0;
    int components_ = 0;
};

struct MinorResult {
    RibbonGraph graph;
    std::vector<int> vertex_origin;            // new vertex -> old vertex, -1 if formed by the operation
    std::vector<int> flag_image;               // old flag -> new flag, -1 if removed
    std::vector<std::vector<int>> consumed;    // per new vertex: old flags of the removed edge on its boundary
};

RibbonGraph delete_edge(const RibbonGraph& g, EdgeId e);
RibbonGraph contract_edge(const RibbonGraph& g, EdgeId e);
RibbonGraph geometric_dual(const RibbonGraph& g);
RibbonGraph partial_dual(const RibbonGraph& g, const std::vector<EdgeId>& a);
RibbonGraph restrict_to(const RibbonGraph& g, const std::vector<EdgeId>& a);
// h's edge ids are shifted past g's largest id
RibbonGraph disjoint_union(const RibbonGraph& g, const RibbonGraph& h);
// One-point join: h's rotation at vh (read from index arc_h) is inserted into
// g's rotation at vg before position arc_g (-1 = at the end).  h's edge ids
// are shifted; the merged vertex sits at vg's position, h's other vertices
// follow g's.
RibbonGraph join_at(const RibbonGraph& g, int vg, const RibbonGraph& h, int vh, int arc_g = -1, int arc_h = 0);
// offset used by disjoint_union/join_at for h's ids
EdgeId id_offset_for(const RibbonGraph& g);

int euler_genus(const RibbonGraph& g);
int euler_genus(const RibbonGraph& g, EdgeMask a);
bool orientable(const RibbonGraph& g);
Half rho(const RibbonGraph& g, EdgeMask a);
MultiGraph underlying_graph(const RibbonGraph& g);

// Equivalence of labelled ribbon graphs: a bijection of corners preserving
// the three involutions and edge ids (mirror images allowed).
bool equivalent(const RibbonGraph& a, const RibbonGraph& b);
// Invariant of equivalence; equal codes <=> equivalent.
std::vector<int> canonical_code(const RibbonGraph& g);
// Canonical code minimised over all relabellings of edge ids.
std::vector<int> unlabelled_code(const RibbonGraph& g);

} // namespace ribbon
