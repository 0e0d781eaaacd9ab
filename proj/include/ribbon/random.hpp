#pragma once

#include "ribbon/coloured.hpp"

#include <cstdint>
#include <vector>

namespace ribbon {

// Deterministic for a seed: uniform rotation slots and endpoints, twists with
// probability 3/10, and random coarsenings of the discrete colourings.
ColouredRibbonGraph random_coloured_ribbon_graph(std::uint64_t seed, int v_max, int e_max);

// All set partitions of {0..n-1} as restricted growth strings.
std::vector<Partition> all_partitions(int n);

// Every ribbon graph with 1..v_max vertices and 0..e_max edges, one per
// equivalence class up to relabelling edges.
std::vector<RibbonGraph> all_ribbon_graphs(int v_max, int e_max);

// The above with every pair of colour partitions.
std::vector<ColouredRibbonGraph> all_coloured_ribbon_graphs(int v_max, int e_max);

} // namespace ribbon
