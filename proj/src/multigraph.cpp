#include "ribbon/multigraph.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace ribbon {

namespace {

struct Dsu {
    std::vector<int> parent;
    int sets;
    explicit Dsu(int n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        --sets;
        return true;
    }
};

} // namespace

MultiGraph::MultiGraph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : n(vertices), edges(std::move(edge_list)) {
    ids.resize(edges.size());
    std::iota(ids.begin(), ids.end(), 1);
    for (auto [u, v] : edges)
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("multigraph endpoint out of range");
}

MultiGraph::MultiGraph(int vertices, std::vector<std::pair<int, int>> edge_list, std::vector<EdgeId> edge_ids)
    : n(vertices), edges(std::move(edge_list)), ids(std::move(edge_ids)) {
    if (ids.size() != edges.size()) throw std::invalid_argument("multigraph id list length mismatch");
    for (auto [u, v] : edges)
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("multigraph endpoint out of range");
}

EdgeMask MultiGraph::all_edges() const {
    if (edges.size() > 63) throw std::length_error("too many edges for subset operations");
    return edges.size() == 0 ? 0 : (~EdgeMask(0) >> (64 - edges.size()));
}

int MultiGraph::position_of(EdgeId id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<int>(i);
    return -1;
}

int components(const MultiGraph& g, EdgeMask a) {
    Dsu d(g.n);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (a >> i & 1) d.unite(g.edges[i].first, g.edges[i].second);
    return d.sets;
}

int rank(const MultiGraph& g, EdgeMask a) {
    return g.n - components(g, a);
}

bool is_loop(const MultiGraph& g, int pos) {
    return g.edges.at(pos).first == g.edges.at(pos).second;
}

bool is_bridge(const MultiGraph& g, int pos) {
    EdgeMask all = g.all_edges();
    return components(g, all & ~(EdgeMask(1) << pos)) != components(g, all);
}

MultiGraph delete_edge(const MultiGraph& g, int pos) {
    MultiGraph h = g;
    h.edges.erase(h.edges.begin() + pos);
    h.ids.erase(h.ids.begin() + pos);
    return h;
}

MultiGraph contract_edge(const MultiGraph& g, int pos) {
    auto [u, v] = g.edges.at(pos);
    MultiGraph h = delete_edge(g, pos);
    if (u == v) return h;
    int keep = std::min(u, v), gone = std::max(u, v);
    auto relabel = [&](int x) {
        if (x == gone) return keep;
        return x > gone ? x - 1 : x;
    };
    for (auto& [a, b] : h.edges) {
        a = relabel(a);
        b = relabel(b);
    }
    --h.n;
    return h;
}

bool same_up_to_vertex_names(const MultiGraph& a, const MultiGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> partner(a.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        partner[i] = b.position_of(a.ids[i]);
        if (partner[i] < 0) return false;
    }
    std::vector<int> fwd(a.n, -1), back(b.n, -1);
    // backtracking over the orientation of each edge's endpoint matching
    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == a.edges.size()) return true;
        auto [p, q] = a.edges[i];
        auto [r, s] = b.edges[partner[i]];
        for (int flip = 0; flip < 2; ++flip) {
            int t1 = flip ? s : r, t2 = flip ? r : s;
            std::vector<std::pair<int, int>> bound;
            auto bind = [&](int x, int y) {
                if (fwd[x] == -1 && back[y] == -1) {
                    fwd[x] = y;
                    back[y] = x;
                    bound.emplace_back(x, y);
                    return true;
                }
                return fwd[x] == y;
            };
            if (bind(p, t1) && bind(q, t2) && self(self, i + 1)) return true;
            for (auto [x, y] : bound) {
                fwd[x] = -1;
                back[y] = -1;
            }
            if (r == s) break;
        }
        return false;
    };
    return search(search, 0);
}

HalfPoly tutte_classical(const MultiGraph& g) {
    const std::vector<std::string> vars{"x", "y"};
    // (x-1)^i (y-1)^j expanded from counts t[i][j]
    const int m = g.edge_count();
    const int rE = rank(g);
    std::vector<std::vector<Integer>> count(rE + 1, std::vector<Integer>(m + 1, 0));
    EdgeMask all = g.all_edges();
    for (EdgeMask a = 0;; a = (a - all) & all) {
        int r = rank(g, a);
        int size = std::popcount(a);
        count[rE - r][size - r] += 1;
        if (a == all) break;
    }
    HalfPoly xm1 = HalfPoly::variable("x") - HalfPoly::constant(1);
    HalfPoly ym1 = HalfPoly::variable("y") - HalfPoly::constant(1);
    HalfPoly out(vars);
    for (int i = 0; i <= rE; ++i)
        for (int j = 0; j <= m; ++j)
            if (count[i][j] != 0) out += HalfPoly::constant(count[i][j]) * xm1.pow(i) * ym1.pow(j);
    return out.over(vars);
}

namespace {

const std::vector<std::string> kGraphUVars{"x", "y", "a", "b", "gamma"};

HalfPoly graph_var(int i) {
    std::vector<int> e(kGraphUVars.size(), 0);
    e[i] = 2;
    return HalfPoly::monomial(kGraphUVars, e);
}

HalfPoly graph_U(const MultiGraph& g) {
    if (g.edges.empty()) return graph_var(4).pow(g.n);
    if (is_bridge(g, 0)) return graph_var(0) * graph_U(contract_edge(g, 0));
    if (is_loop(g, 0)) return graph_var(1) * graph_U(delete_edge(g, 0));
    return graph_var(2) * graph_U(delete_edge(g, 0)) + graph_var(3) * graph_U(contract_edge(g, 0));
}

} // namespace

HalfPoly universal_graph_U(const MultiGraph& g) {
    return graph_U(g).over(kGraphUVars);
}

} // namespace ribbon
