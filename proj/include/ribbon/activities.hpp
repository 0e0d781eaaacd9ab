#pragma once

#include "ribbon/evaluators.hpp"

#include <string>
#include <vector>

namespace ribbon {

// Edge orders below are listed lowest first.  Resolution proceeds from the
// top: the root (height m) handles the last edge of the order.

// Activity type 1..10; 0 stands for an external edge whose delete step
// contributes a unit coefficient.
using ActivityType = int;
std::string activity_token(ActivityType t); // "unit" or "1".."10"
HalfPoly activity_coefficient(ActivityType t);

enum class Action { delete_edge, contract_edge, forced_delete, forced_contract };
std::string to_string(Action a);

struct ResolutionStep {
    EdgeId edge = 0;
    Action action = Action::delete_edge;
    ActivityType type = 0;
    // A forced step is sound when P(H\e) = P(H/e) is guaranteed, i.e. when
    // the two one-edge classes of e at its node agree.  A trivial loop whose
    // two boundary classes differ but are linked elsewhere (or, dually, a
    // bridge whose endpoint classes are linked elsewhere) is not.
    bool sound = true;
};

// always_force: bridges and trivial loops are always forced.
// sound_only:   unsound forced steps branch like any other edge instead.
enum class Forcing { always_force, sound_only };

struct ResolutionBranch {
    std::vector<ResolutionStep> steps; // root first
};

// Quasi-trees are sorted lists of edge ids.
using QuasiTree = std::vector<EdgeId>;

std::vector<QuasiTree> spanning_quasi_trees(const RibbonGraph& g);

// e is a loop whose two rotation arcs are joined only through its vertex.
bool is_trivial_loop(const RibbonGraph& g, EdgeId e);
bool is_ribbon_bridge(const RibbonGraph& g, EdgeId e);

std::vector<ResolutionBranch> resolution_branches(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order,
                                                  Forcing forcing = Forcing::always_force);
QuasiTree branch_to_quasi_tree(const ColouredRibbonGraph& cg, const ResolutionBranch& branch);

// Node graph G\D/C reached just before edge e is processed on the branch of T.
ColouredRibbonGraph node_graph(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, const QuasiTree& t,
                               EdgeId e);
ActivityType classify_activity(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, const QuasiTree& t,
                               EdgeId e);

HalfPoly quasi_tree_expansion(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order,
                              Forcing forcing = Forcing::always_force);
// True when every forced step on every branch of the standard tree is sound.
bool forced_steps_sound(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order);

struct ActivityPredicates {
    bool internal = false;
    bool vertex_essential = false;
    bool boundary_essential = false;
    bool live = false;
    bool orientable = false; // loop type of e in the one-vertex partial dual
    bool consistent = false; // read from the node graph's loop orientability
};

ActivityPredicates activity_predicates(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order, const QuasiTree& t,
                               EdgeId e);

} // namespace ribbon
