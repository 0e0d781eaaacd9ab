#include "ribbon/random.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace ribbon {

namespace {

Partition random_coarsening(std::mt19937_64& rng, int n) {
    if (n <= 1) return discrete_partition(n);
    // a third of the time keep every element apart
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) return discrete_partition(n);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::vector<int> labels(n);
    for (int& l : labels) l = pick(rng);
    return normalise(labels);
}

} // namespace

ColouredRibbonGraph random_coloured_ribbon_graph(std::uint64_t seed, int v_max, int e_max) {
    std::mt19937_64 rng(seed);
    const int v = v_max <= 0 ? 0 : std::uniform_int_distribution<int>(1, v_max)(rng);
    const int m = v == 0 || e_max <= 0 ? 0 : std::uniform_int_distribution<int>(0, e_max)(rng);
    std::vector<std::vector<HalfEdge>> rot(v);
    std::uniform_int_distribution<int> vertex(0, std::max(0, v - 1));
    std::bernoulli_distribution twist(0.3);
    std::set<EdgeId> twisted;
    for (EdgeId e = 1; e <= m; ++e) {
        for (int end = 1; end <= 2; ++end) {
            auto& r = rot[vertex(rng)];
            const int slot = std::uniform_int_distribution<int>(0, static_cast<int>(r.size()))(rng);
            r.insert(r.begin() + slot, HalfEdge{e, end});
        }
        if (twist(rng)) twisted.insert(e);
    }
    RibbonGraph g(RotationSystem::with_edges(m, rot, twisted));
    Partition vc = random_coarsening(rng, g.vertex_count());
    Partition bc = random_coarsening(rng, g.boundary_count());
    return ColouredRibbonGraph(g, vc, bc);
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    if (n == 0) return {Partition{}};
    Partition a(n, 0);
    // restricted growth strings: a[i] <= 1 + max(a[0..i-1])
    while (true) {
        out.push_back(a);
        int i = n - 1;
        for (; i > 0; --i) {
            int top = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= top) break;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return out;
}

namespace {

// Every way of distributing the half-edges of edges 1..m over v cyclic
// rotations; each rotation is generated once per cyclic class.
void distribute(int v, int m, std::vector<std::vector<std::vector<HalfEdge>>>& out) {
    std::vector<HalfEdge> hs;
    for (EdgeId e = 1; e <= m; ++e) hs.push_back({e, 1}), hs.push_back({e, 2});
    const int n = static_cast<int>(hs.size());
    std::vector<int> owner(n, 0);
    while (true) {
        std::vector<std::vector<HalfEdge>> groups(v);
        for (int i = 0; i < n; ++i) groups[owner[i]].push_back(hs[i]);
        // fix the first element of each group; permute the rest
        std::vector<std::vector<std::vector<HalfEdge>>> choices(v);
        for (int k = 0; k < v; ++k) {
            auto& g = groups[k];
            if (g.size() <= 1) {
                choices[k].push_back(g);
                continue;
            }
            std::vector<HalfEdge> tail(g.begin() + 1, g.end());
            std::sort(tail.begin(), tail.end());
            do {
                std::vector<HalfEdge> r{g.front()};
                r.insert(r.end(), tail.begin(), tail.end());
                choices[k].push_back(std::move(r));
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
        std::vector<int> idx(v, 0);
        while (true) {
            std::vector<std::vector<HalfEdge>> rs(v);
            for (int k = 0; k < v; ++k) rs[k] = choices[k][idx[k]];
            out.push_back(std::move(rs));
            int k = 0;
            while (k < v && ++idx[k] == static_cast<int>(choices[k].size())) idx[k++] = 0;
            if (k == v) break;
        }
        int i = 0;
        while (i < n && ++owner[i] == v) owner[i++] = 0;
        if (i == n) break;
    }
}

} // namespace

std::vector<RibbonGraph> all_ribbon_graphs(int v_max, int e_max) {
    std::vector<RibbonGraph> out;
    std::set<std::vector<int>> seen;
    for (int v = 1; v <= v_max; ++v)
        for (int m = 0; m <= e_max; ++m) {
            std::vector<std::vector<std::vector<HalfEdge>>> rots;
            distribute(v, m, rots);
            for (const auto& r : rots)
                for (int tw = 0; tw < (1 << m); ++tw) {
                    std::set<EdgeId> twisted;
                    for (int e = 0; e < m; ++e)
                        if (tw >> e & 1) twisted.insert(e + 1);
                    RibbonGraph g(RotationSystem::with_edges(m, r, twisted));
                    if (seen.insert(unlabelled_code(g)).second) out.push_back(std::move(g));
                }
        }
    return out;
}

std::vector<ColouredRibbonGraph> all_coloured_ribbon_graphs(int v_max, int e_max) {
    std::vector<ColouredRibbonGraph> out;
    for (const RibbonGraph& g : all_ribbon_graphs(v_max, e_max))
        for (const Partition& vc : all_partitions(g.vertex_count()))
            for (const Partition& bc : all_partitions(g.boundary_count())) out.emplace_back(g, vc, bc);
    return out;
}

} // namespace ribbon
