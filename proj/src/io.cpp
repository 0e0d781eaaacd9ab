#include "ribbon/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace ribbon {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
        throw ParseError("line " + std::to_string(line) + ": malformed token '" + std::string(tok) + "'");
    return v;
}

HalfEdge half_edge(std::string_view tok, int line) {
    auto dot = tok.find('.');
    if (dot == std::string_view::npos)
        throw ParseError("line " + std::to_string(line) + ": malformed half-edge '" + std::string(tok) + "'");
    HalfEdge h{to_int(tok.substr(0, dot), line), to_int(tok.substr(dot + 1), line)};
    if (h.end != 1 && h.end != 2)
        throw ParseError("line " + std::to_string(line) + ": malformed half-edge '" + std::string(tok) + "'");
    return h;
}

// "{1,3} {2}" -> 1-based blocks
std::vector<std::vector<int>> parse_blocks(std::string_view s, int line) {
    std::vector<std::vector<int>> blocks;
    std::size_t i = 0;
    while (true) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i == s.size()) break;
        if (s[i] != '{') throw ParseError("line " + std::to_string(line) + ": expected '{'");
        auto close = s.find('}', i);
        if (close == std::string_view::npos) throw ParseError("line " + std::to_string(line) + ": missing '}'");
        std::vector<int> block;
        std::string_view inner = s.substr(i + 1, close - i - 1);
        std::size_t k = 0;
        while (k <= inner.size()) {
            auto comma = inner.find(',', k);
            if (comma == std::string_view::npos) comma = inner.size();
            std::string_view tok = trim(inner.substr(k, comma - k));
            if (!tok.empty()) block.push_back(to_int(tok, line));
            k = comma + 1;
        }
        if (block.empty()) throw ParseError("line " + std::to_string(line) + ": empty class");
        blocks.push_back(std::move(block));
        i = close + 1;
    }
    return blocks;
}

Partition partition_from(int n, const std::vector<std::vector<int>>& blocks, const std::string& what, int line) {
    for (const auto& b : blocks)
        for (int x : b)
            if (x < 1 || x > n)
                throw ParseError("line " + std::to_string(line) + ": " + what + " index " + std::to_string(x) +
                                 " out of range; the graph has " + what.substr(0, 1) + " = " + std::to_string(n));
    auto zero_based = blocks;
    for (auto& b : zero_based)
        for (int& x : b) --x;
    try {
        return from_blocks(n, zero_based);
    } catch (const RibbonError& e) {
        throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
}

} // namespace

ColouredRibbonGraph parse_ribbon(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool header = false;
    int m = -1;
    std::set<EdgeId> twisted;
    std::vector<std::vector<HalfEdge>> vertices;
    std::vector<std::vector<int>> vblocks, bblocks;
    int vline = 0, bline = 0;
    bool have_v = false, have_b = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "ribbon v1") throw ParseError("line " + std::to_string(line_no) + ": expected 'ribbon v1'");
            header = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key: value'");
        std::string_view key = trim(line.substr(0, colon)), rest = trim(line.substr(colon + 1));
        if (key == "edges") {
            if (m >= 0) throw ParseError("line " + std::to_string(line_no) + ": duplicate edges line");
            m = to_int(rest, line_no);
            if (m < 0 || m > 60) throw ParseError("line " + std::to_string(line_no) + ": edge count out of range");
        } else if (key == "twist") {
            for (auto tok : split_ws(rest)) {
                if (!tok.empty() && tok.front() == 'e') tok.remove_prefix(1);
                twisted.insert(to_int(tok, line_no));
            }
        } else if (key == "vertex") {
            std::vector<HalfEdge> rot;
            for (auto tok : split_ws(rest)) rot.push_back(half_edge(tok, line_no));
            vertices.push_back(std::move(rot));
        } else if (key == "vclasses") {
            vblocks = parse_blocks(rest, line_no);
            have_v = true;
            vline = line_no;
        } else if (key == "bclasses") {
            bblocks = parse_blocks(rest, line_no);
            have_b = true;
            bline = line_no;
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!header) throw ParseError("missing 'ribbon v1' header");
    if (m < 0) throw ParseError("missing 'edges:' line");
    RotationSystem rs = RotationSystem::with_edges(m, vertices, twisted);
    if (auto diag = validate(rs)) throw ParseError(*diag);
    RibbonGraph g(rs);
    Partition vc = have_v ? partition_from(g.vertex_count(), vblocks, "vertex", vline)
                          : discrete_partition(g.vertex_count());
    Partition bc = have_b ? partition_from(g.boundary_count(), bblocks, "boundary", bline)
                          : discrete_partition(g.boundary_count());
    return ColouredRibbonGraph(g, vc, bc);
}

RibbonGraph compact_labels(const RibbonGraph& g) {
    std::vector<EdgeId> ids = g.edge_ids();
    std::sort(ids.begin(), ids.end());
    std::map<EdgeId, EdgeId> to;
    for (std::size_t i = 0; i < ids.size(); ++i) to[ids[i]] = static_cast<EdgeId>(i + 1);
    RotationSystem rs = g.rotation_system();
    RotationSystem out;
    for (EdgeId e : rs.edges) out.edges.push_back(to[e]);
    std::sort(out.edges.begin(), out.edges.end());
    for (const auto& rot : rs.vertices) {
        std::vector<HalfEdge> r;
        for (HalfEdge h : rot) r.push_back({to[h.edge], h.end});
        out.vertices.push_back(std::move(r));
    }
    for (EdgeId e : rs.twisted) out.twisted.insert(to[e]);
    return RibbonGraph(out);
}

std::string format_partition(const Partition& p) {
    std::string s;
    for (const auto& b : blocks(p)) {
        if (!s.empty()) s += ' ';
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
        s += '}';
    }
    return s;
}

std::string serialize(const ColouredRibbonGraph& cg) {
    // relabelling is monotone, so canonical boundary indices are unchanged
    RibbonGraph g = compact_labels(cg.graph());
    std::ostringstream out;
    out << "ribbon v1\n";
    out << "edges: " << g.edge_count() << "\n";
    std::vector<EdgeId> tw;
    for (int p = 0; p < g.edge_count(); ++p)
        if (g.is_twisted(p)) tw.push_back(g.edge_ids()[p]);
    std::sort(tw.begin(), tw.end());
    if (!tw.empty()) {
        out << "twist:";
        for (EdgeId e : tw) out << " e" << e;
        out << "\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "vertex:";
        for (HalfEdge h : g.rotation(v)) out << " " << to_string(h);
        out << "\n";
    }
    if (class_count(cg.vclass()) != g.vertex_count()) out << "vclasses: " << format_partition(cg.vclass()) << "\n";
    if (class_count(cg.bclass()) != g.boundary_count()) out << "bclasses: " << format_partition(cg.bclass()) << "\n";
    return out.str();
}

} // namespace ribbon
