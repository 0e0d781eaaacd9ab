#include "ribbon/ribbon_graph.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <bit>
#include <map>
#include <numeric>

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
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[b] = a;
            --sets;
        }
    }
};

} // namespace

std::string to_string(const HalfEdge& h) {
    return std::to_string(h.edge) + "." + std::to_string(h.end);
}

std::string to_string(const SideFlag& f) {
    return std::to_string(f.edge) + "." + std::to_string(f.end) + (f.side == Side::left ? "L" : "R");
}

RotationSystem RotationSystem::with_edges(int m, std::vector<std::vector<HalfEdge>> vertices, std::set<EdgeId> twisted) {
    RotationSystem rs;
    for (int i = 1; i <= m; ++i) rs.edges.push_back(i);
    rs.vertices = std::move(vertices);
    rs.twisted = std::move(twisted);
    return rs;
}

std::optional<std::string> validate(const RotationSystem& rs) {
    std::map<EdgeId, std::array<int, 2>> seen;
    for (EdgeId e : rs.edges) {
        if (e <= 0) return "edge id " + std::to_string(e) + " is not positive";
        if (!seen.emplace(e, std::array<int, 2>{0, 0}).second)
            return "edge id " + std::to_string(e) + " listed twice";
    }
    for (const auto& rot : rs.vertices) {
        for (const auto& h : rot) {
            auto it = seen.find(h.edge);
            if (it == seen.end()) return "unknown edge in half-edge " + to_string(h);
            if (h.end != 1 && h.end != 2) return "bad end in half-edge " + to_string(h);
            ++it->second[h.end - 1];
        }
    }
    for (const auto& [e, count] : seen) {
        for (int end = 1; end <= 2; ++end) {
            int c = count[end - 1];
            if (c != 1)
                return "half-edge multiplicity: " + std::to_string(e) + "." + std::to_string(end) + " occurs " +
                       std::to_string(c) + " times";
        }
    }
    for (EdgeId e : rs.twisted)
        if (!seen.count(e)) return "twist entry for nonexistent edge " + std::to_string(e);
    return std::nullopt;
}

RibbonGraph::RibbonGraph(const RotationSystem& rs) {
    if (auto problem = validate(rs)) throw RibbonError(*problem);
    labels_ = rs.edges;
    std::sort(labels_.begin(), labels_.end());
    const int m = static_cast<int>(labels_.size());
    a0_.assign(4 * m, -1);
    a1_.assign(4 * m, -1);
    a2_.assign(4 * m, -1);
    // corner flags: 4*pos + 2*(end-1) + {0 prev, 1 next}
    for (int p = 0; p < m; ++p) {
        for (int end = 0; end < 2; ++end) {
            a2_[4 * p + 2 * end] = 4 * p + 2 * end + 1;
            a2_[4 * p + 2 * end + 1] = 4 * p + 2 * end;
        }
        auto pair = [&](int x, int y) {
            a0_[x] = y;
            a0_[y] = x;
        };
        if (rs.twisted.count(labels_[p])) {
            pair(4 * p + 1, 4 * p + 3);
            pair(4 * p + 0, 4 * p + 2);
        } else {
            pair(4 * p + 1, 4 * p + 2);
            pair(4 * p + 0, 4 * p + 3);
        }
    }
    for (const auto& rot : rs.vertices) {
        if (rot.empty()) {
            start_.push_back(-1);
            continue;
        }
        auto flag = [&](const HalfEdge& h, int s) { return 4 * position_of(h.edge) + 2 * (h.end - 1) + s; };
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int nx = flag(rot[i], 1);
            int pv = flag(rot[(i + 1) % rot.size()], 0);
            a1_[nx] = pv;
            a1_[pv] = nx;
        }
        start_.push_back(flag(rot.front(), 0));
    }
    derive();
}

RibbonGraph::RibbonGraph(std::vector<EdgeId> labels, std::vector<int> a0, std::vector<int> a1, std::vector<int> a2,
                         std::vector<int> start)
    : labels_(std::move(labels)), a0_(std::move(a0)), a1_(std::move(a1)), a2_(std::move(a2)),
      start_(std::move(start)) {
    derive();
}

void RibbonGraph::derive() {
    const int n = flag_count();
    vertex_of_flag_.assign(n, -1);
    prev_.assign(n, false);
    for (int v = 0; v < vertex_count(); ++v) {
        int s = start_[v];
        if (s < 0) continue;
        int x = s;
        do {
            if (vertex_of_flag_[x] != -1) throw std::logic_error("corner visited twice while tracing a vertex");
            vertex_of_flag_[x] = v;
            prev_[x] = true;
            int y = a2_[x];
            vertex_of_flag_[y] = v;
            x = a1_[y];
        } while (x != s);
    }
    for (int x = 0; x < n; ++x)
        if (vertex_of_flag_[x] < 0) throw std::logic_error("corner not on any vertex");

    Dsu d(n);
    for (int x = 0; x < n; ++x) {
        d.unite(x, a0_[x]);
        d.unite(x, a1_[x]);
        d.unite(x, a2_[x]);
    }
    components_ = d.sets + isolated_vertex_count();

    // boundary components: <a0,a1>-orbits, each walked from its least side flag
    std::vector<bool> seen(n, false);
    std::vector<std::pair<std::tuple<int, int, int>, int>> firsts;
    auto key = [&](int x) {
        int end = end_of_flag(x);
        int side = (end == 1) == prev_[x] ? 0 : 1;
        return std::tuple<int, int, int>(x / 4, end, side);
    };
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        int best = x;
        int y = x;
        do {
            seen[y] = true;
            if (key(y) < key(best)) best = y;
            int z = a0_[y];
            seen[z] = true;
            if (key(z) < key(best)) best = z;
            y = a1_[z];
        } while (y != x);
        firsts.emplace_back(key(best), best);
    }
    std::sort(firsts.begin(), firsts.end());
    face_of_flag_.assign(n, -1);
    face_walk_.clear();
    for (const auto& [k, s] : firsts) {
        int f = static_cast<int>(face_walk_.size());
        std::vector<int> walk;
        int y = s;
        do {
            walk.push_back(y);
            int z = a0_[y];
            walk.push_back(z);
            y = a1_[z];
        } while (y != s);
        for (int w : walk) face_of_flag_[w] = f;
        face_walk_.push_back(std::move(walk));
    }
    face_count_ = static_cast<int>(face_walk_.size());
    isolated_face_.assign(vertex_count(), -1);
    face_vertex_.assign(face_walk_.size(), -1);
    for (int v = 0; v < vertex_count(); ++v) {
        if (start_[v] < 0) {
            isolated_face_[v] = face_count_++;
            face_vertex_.push_back(v);
        }
    }
}

int RibbonGraph::position_of(EdgeId e) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), e);
    if (it == labels_.end() || *it != e) return -1;
    return static_cast<int>(it - labels_.begin());
}

int RibbonGraph::require_position(EdgeId e) const {
    int p = position_of(e);
    if (p < 0) throw RibbonError("unknown edge " + std::to_string(e));
    return p;
}

EdgeMask RibbonGraph::all_edges() const {
    if (labels_.size() > 63) throw std::length_error("too many edges for subset operations");
    return labels_.empty() ? 0 : (~EdgeMask(0) >> (64 - labels_.size()));
}

EdgeMask RibbonGraph::mask_of(const std::vector<EdgeId>& ids) const {
    EdgeMask m = 0;
    for (EdgeId e : ids) m |= EdgeMask(1) << require_position(e);
    return m;
}

int RibbonGraph::isolated_vertex_count() const {
    return static_cast<int>(std::count(start_.begin(), start_.end(), -1));
}

int RibbonGraph::end_of_flag(int x) const {
    int base = 4 * (x / 4);
    return (x == base || a2_[base] == x) ? 1 : 2;
}

SideFlag RibbonGraph::side_flag(int x) const {
    int end = end_of_flag(x);
    Side side = (end == 1) == prev_[x] ? Side::left : Side::right;
    return SideFlag{labels_[x / 4], end, side};
}

int RibbonGraph::flag_of(const SideFlag& f) const {
    int p = position_of(f.edge);
    if (p < 0) return -1;
    for (int x = 4 * p; x < 4 * p + 4; ++x)
        if (side_flag(x) == f) return x;
    return -1;
}

int RibbonGraph::isolated_vertex_of_face(int f) const {
    return face_vertex_.at(f);
}

std::vector<HalfEdge> RibbonGraph::rotation(int v) const {
    std::vector<HalfEdge> rot;
    int s = start_.at(v);
    if (s < 0) return rot;
    int x = s;
    do {
        rot.push_back(HalfEdge{labels_[x / 4], end_of_flag(x)});
        x = a1_[a2_[x]];
    } while (x != s);
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    return rot;
}

bool RibbonGraph::is_twisted(int pos) const {
    return prev_[4 * pos] == prev_[a0_[4 * pos]];
}

std::pair<int, int> RibbonGraph::endpoints(int pos) const {
    return {vertex_of_flag_[4 * pos], vertex_of_flag_[a0_[4 * pos]]};
}

std::pair<int, int> RibbonGraph::side_faces(int pos) const {
    return {face_of_flag_[4 * pos], face_of_flag_[a2_[4 * pos]]};
}

RotationSystem RibbonGraph::rotation_system() const {
    RotationSystem rs;
    rs.edges = labels_;
    for (int v = 0; v < vertex_count(); ++v) rs.vertices.push_back(rotation(v));
    for (int p = 0; p < edge_count(); ++p)
        if (is_twisted(p)) rs.twisted.insert(labels_[p]);
    return rs;
}

std::vector<BoundaryComponent> RibbonGraph::boundary_components() const {
    std::vector<BoundaryComponent> out;
    for (std::size_t f = 0; f < face_walk_.size(); ++f) {
        BoundaryComponent c;
        c.index = static_cast<int>(f) + 1;
        std::set<int> hosts;
        for (int x : face_walk_[f]) {
            c.flags.push_back(side_flag(x));
            hosts.insert(vertex_of_flag_[x]);
        }
        c.host_vertices.assign(hosts.begin(), hosts.end());
        out.push_back(std::move(c));
    }
    for (int v = 0; v < vertex_count(); ++v) {
        if (start_[v] >= 0) continue;
        BoundaryComponent c;
        c.index = static_cast<int>(out.size()) + 1;
        c.host_vertices = {v};
        out.push_back(std::move(c));
    }
    return out;
}

int RibbonGraph::boundary_count(EdgeMask a) const {
    const int n = flag_count();
    Dsu d(n);
    for (int x = 0; x < n; ++x) {
        d.unite(x, a1_[x]);
        d.unite(x, (a >> (x / 4) & 1) ? a0_[x] : a2_[x]);
    }
    return d.sets + isolated_vertex_count();
}

int RibbonGraph::components(EdgeMask a) const {
    Dsu d(vertex_count());
    for (int p = 0; p < edge_count(); ++p) {
        if (!(a >> p & 1)) continue;
        auto [u, v] = endpoints(p);
        d.unite(u, v);
    }
    return d.sets;
}

bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    return a.rotation_system() == b.rotation_system();
}

MinorResult RibbonGraph::delete_edge_tracked(EdgeId e) const {
    const int p = require_position(e);
    const int n = flag_count();
    std::vector<int> image(n, -1);
    for (int x = 0; x < n; ++x) {
        int q = x / 4;
        image[x] = q < p ? x : (q == p ? -1 : x - 4);
    }
    std::vector<int> a0(n - 4), a1(n - 4), a2(n - 4);
    for (int x = 0; x < n; ++x) {
        if (image[x] < 0) continue;
        a0[image[x]] = image[a0_[x]];
        a2[image[x]] = image[a2_[x]];
        int y = a1_[x];
        while (y / 4 == p) y = a1_[a2_[y]];
        a1[image[x]] = image[y];
    }
    std::vector<int> start(vertex_count(), -1);
    MinorResult r;
    r.consumed.resize(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
        int s = start_[v];
        if (s < 0) continue;
        int x = s;
        do {
            if (x / 4 != p) {
                start[v] = image[x];
                break;
            }
            x = a1_[a2_[x]];
        } while (x != s);
    }
    for (int x = 4 * p; x < 4 * p + 4; ++x) r.consumed[vertex_of_flag_[x]].push_back(x);
    std::vector<EdgeId> labels = labels_;
    labels.erase(labels.begin() + p);
    r.graph = RibbonGraph(std::move(labels), std::move(a0), std::move(a1), std::move(a2), std::move(start));
    r.vertex_origin.resize(vertex_count());
    std::iota(r.vertex_origin.begin(), r.vertex_origin.end(), 0);
    r.flag_image = std::move(image);
    return r;
}

MinorResult RibbonGraph::partial_dual_tracked(EdgeMask a) const {
    const int n = flag_count();
    std::vector<int> a0 = a0_, a2 = a2_;
    std::vector<bool> touched(vertex_count(), false);
    for (int x = 0; x < n; ++x) {
        if (!(a >> (x / 4) & 1)) continue;
        a0[x] = a2_[x];
        a2[x] = a0_[x];
        touched[vertex_of_flag_[x]] = true;
    }
    // new vertices through the touched ones, each started at its least corner
    std::vector<int> fresh;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
        if (seen[x] || !touched[vertex_of_flag_[x]]) continue;
        fresh.push_back(x);
        int y = x;
        do {
            seen[y] = true;
            seen[a2[y]] = true;
            y = a1_[a2[y]];
        } while (y != x);
    }
    MinorResult r;
    std::vector<int> start;
    bool placed = false;
    for (int v = 0; v < vertex_count(); ++v) {
        if (!touched[v]) {
            start.push_back(start_[v]);
            r.vertex_origin.push_back(v);
        } else if (!placed) {
            placed = true;
            for (int s : fresh) {
                start.push_back(s);
                r.vertex_origin.push_back(-1);
            }
        }
    }
    r.consumed.resize(start.size());
    r.flag_image.resize(n);
    std::iota(r.flag_image.begin(), r.flag_image.end(), 0);
    r.graph = RibbonGraph(labels_, std::move(a0), a1_, std::move(a2), std::move(start));
    return r;
}

MinorResult RibbonGraph::contract_edge_tracked(EdgeId e) const {
    const int p = require_position(e);
    MinorResult dualised = partial_dual_tracked(EdgeMask(1) << p);
    MinorResult r = dualised.graph.delete_edge_tracked(e);
    for (int& o : r.vertex_origin) o = dualised.vertex_origin[o];
    return r;
}

RibbonGraph RibbonGraph::geometric_dual() const {
    std::vector<int> start;
    for (const auto& walk : face_walk_) start.push_back(walk.front());
    for (int v = 0; v < vertex_count(); ++v)
        if (start_[v] < 0) start.push_back(-1);
    return RibbonGraph(labels_, a2_, a1_, a0_, std::move(start));
}

RibbonGraph delete_edge(const RibbonGraph& g, EdgeId e) {
    return g.delete_edge_tracked(e).graph;
}

RibbonGraph contract_edge(const RibbonGraph& g, EdgeId e) {
    return g.contract_edge_tracked(e).graph;
}

RibbonGraph geometric_dual(const RibbonGraph& g) {
    return g.geometric_dual();
}

RibbonGraph partial_dual(const RibbonGraph& g, const std::vector<EdgeId>& a) {
    return g.partial_dual_tracked(g.mask_of(a)).graph;
}

RibbonGraph restrict_to(const RibbonGraph& g, const std::vector<EdgeId>& a) {
    g.mask_of(a); // validates ids
    RibbonGraph h = g;
    for (EdgeId e : g.edge_ids())
        if (std::find(a.begin(), a.end(), e) == a.end()) h = delete_edge(h, e);
    return h;
}

EdgeId id_offset_for(const RibbonGraph& g) {
    return g.edge_ids().empty() ? 0 : g.edge_ids().back();
}

namespace {

RotationSystem shifted(const RotationSystem& rs, EdgeId offset) {
    RotationSystem out;
    for (EdgeId e : rs.edges) out.edges.push_back(e + offset);
    for (const auto& rot : rs.vertices) {
        std::vector<HalfEdge> r;
        for (const auto& h : rot) r.push_back(HalfEdge{h.edge + offset, h.end});
        out.vertices.push_back(std::move(r));
    }
    for (EdgeId e : rs.twisted) out.twisted.insert(e + offset);
    return out;
}

} // namespace

RibbonGraph disjoint_union(const RibbonGraph& g, const RibbonGraph& h) {
    RotationSystem a = g.rotation_system();
    RotationSystem b = shifted(h.rotation_system(), id_offset_for(g));
    a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
    a.vertices.insert(a.vertices.end(), b.vertices.begin(), b.vertices.end());
    a.twisted.insert(b.twisted.begin(), b.twisted.end());
    return RibbonGraph(a);
}

RibbonGraph join_at(const RibbonGraph& g, int vg, const RibbonGraph& h, int vh, int arc_g, int arc_h) {
    if (vg < 0 || vg >= g.vertex_count()) throw RibbonError("unknown vertex " + std::to_string(vg + 1));
    if (vh < 0 || vh >= h.vertex_count()) throw RibbonError("unknown vertex " + std::to_string(vh + 1));
    RotationSystem a = g.rotation_system();
    RotationSystem b = shifted(h.rotation_system(), id_offset_for(g));
    auto& target = a.vertices[vg];
    std::vector<HalfEdge> inserted = b.vertices[vh];
    if (!inserted.empty()) {
        if (arc_h < 0 || arc_h >= static_cast<int>(inserted.size())) throw RibbonError("arc index out of range");
        std::rotate(inserted.begin(), inserted.begin() + arc_h, inserted.end());
    }
    int at = arc_g < 0 ? static_cast<int>(target.size()) : arc_g;
    if (at > static_cast<int>(target.size())) throw RibbonError("arc index out of range");
    target.insert(target.begin() + at, inserted.begin(), inserted.end());
    a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
    for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v)
        if (v != vh) a.vertices.push_back(b.vertices[v]);
    a.twisted.insert(b.twisted.begin(), b.twisted.end());
    return RibbonGraph(a);
}

int euler_genus(const RibbonGraph& g) {
    return euler_genus(g, g.all_edges());
}

int euler_genus(const RibbonGraph& g, EdgeMask a) {
    return 2 * g.components(a) - g.vertex_count() + std::popcount(a) - g.boundary_count(a);
}

bool orientable(const RibbonGraph& g) {
    // the flag graph is bipartite exactly when the surface is orientable
    const int n = g.flag_count();
    std::vector<int> colour(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {g.alpha0(x), g.alpha1(x), g.alpha2(x)}) {
                if (colour[y] < 0) {
                    colour[y] = 1 - colour[x];
                    stack.push_back(y);
                } else if (colour[y] == colour[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Half rho(const RibbonGraph& g, EdgeMask a) {
    return Half{std::popcount(a) + g.vertex_count() - g.boundary_count(a)};
}

MultiGraph underlying_graph(const RibbonGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < g.edge_count(); ++p) edges.push_back(g.endpoints(p));
    return MultiGraph(g.vertex_count(), std::move(edges), g.edge_ids());
}

namespace {

// BFS code of the connected flag component containing `root`, with edges
// named through `name`.
std::vector<int> component_code(const RibbonGraph& g, int root, const std::vector<int>& name) {
    std::vector<int> num(g.flag_count(), -1);
    std::vector<int> order{root};
    num[root] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        for (int y : {g.alpha0(x), g.alpha1(x), g.alpha2(x)}) {
            if (num[y] < 0) {
                num[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
    std::vector<int> code;
    code.reserve(order.size() * 4);
    for (int x : order) {
        code.push_back(name[x / 4]);
        code.push_back(num[g.alpha0(x)]);
        code.push_back(num[g.alpha1(x)]);
        code.push_back(num[g.alpha2(x)]);
    }
    return code;
}

std::vector<int> code_with_names(const RibbonGraph& g, const std::vector<int>& name) {
    const int n = g.flag_count();
    Dsu d(n);
    for (int x = 0; x < n; ++x) {
        d.unite(x, g.alpha0(x));
        d.unite(x, g.alpha1(x));
        d.unite(x, g.alpha2(x));
    }
    // least-named edge of each component
    std::map<int, int> least_pos; // root -> position
    for (int p = 0; p < g.edge_count(); ++p) {
        int r = d.find(4 * p);
        auto it = least_pos.find(r);
        if (it == least_pos.end() || name[p] < name[it->second]) least_pos[r] = p;
    }
    std::vector<std::pair<int, std::vector<int>>> parts;
    for (const auto& [r, p] : least_pos) {
        std::vector<int> best;
        for (int x = 4 * p; x < 4 * p + 4; ++x) {
            auto c = component_code(g, x, name);
            if (best.empty() || c < best) best = std::move(c);
        }
        parts.emplace_back(name[p], std::move(best));
    }
    std::sort(parts.begin(), parts.end());
    std::vector<int> code;
    for (auto& [k, c] : parts) {
        code.push_back(-1);
        code.insert(code.end(), c.begin(), c.end());
    }
    code.push_back(-2);
    code.push_back(g.isolated_vertex_count());
    return code;
}

} // namespace

std::vector<int> canonical_code(const RibbonGraph& g) {
    std::vector<int> name(g.edge_ids().begin(), g.edge_ids().end());
    return code_with_names(g, name);
}

std::vector<int> unlabelled_code(const RibbonGraph& g) {
    std::vector<int> name(g.edge_count());
    std::iota(name.begin(), name.end(), 1);
    std::vector<int> best;
    do {
        auto c = code_with_names(g, name);
        if (best.empty() || c < best) best = std::move(c);
    } while (std::next_permutation(name.begin(), name.end()));
    return best;
}

bool equivalent(const RibbonGraph& a, const RibbonGraph& b) {
    return a.edge_ids() == b.edge_ids() && a.vertex_count() == b.vertex_count() &&
           canonical_code(a) == canonical_code(b);
}

} // namespace ribbon
