#include "ribbon/activities.hpp"
#include "ribbon/check.hpp"
#include "ribbon/evaluators.hpp"
#include "ribbon/io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ribbon;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ColouredRibbonGraph load(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return parse_ribbon(buf.str());
}

std::string quasi_tree_text(const QuasiTree& q) {
    std::string s = "{";
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
    return s + "}";
}

void echo_walks(const RibbonGraph& g) {
    for (const BoundaryComponent& b : g.boundary_components()) {
        std::cerr << "boundary " << b.index << ":";
        if (b.flags.empty()) std::cerr << " (isolated vertex " << b.host_vertices.front() + 1 << ")";
        for (const SideFlag& f : b.flags) std::cerr << " " << to_string(f);
        std::cerr << "\n";
    }
}

HalfPoly compute(const ColouredRibbonGraph& cg, const std::string& poly, std::optional<int> ambient) {
    if (poly == "tps") return t_ps(cg);
    if (poly == "ts") return t_s(cg);
    if (poly == "tcps") return t_cps(cg);
    if (poly == "tcs") return t_cs(cg.graph());
    if (poly == "U") return universal_U_state_sum(cg);
    if (poly == "P") return p_normalized(cg);
    if (poly == "br") return bollobas_riordan(cg.graph(), cg.vclass());
    if (poly == "krushkal") return krushkal(cg, ambient.value_or(euler_genus(cg.graph())));
    throw UsageError("unknown polynomial '" + poly + "'");
}

std::vector<EdgeId> edge_order(const RibbonGraph& g, const std::vector<int>& given) {
    if (given.empty()) {
        std::vector<EdgeId> ids = g.edge_ids();
        std::sort(ids.begin(), ids.end());
        return ids;
    }
    std::vector<EdgeId> ids(given.begin(), given.end()), have = g.edge_ids();
    std::vector<EdgeId> a = ids;
    std::sort(a.begin(), a.end());
    std::sort(have.begin(), have.end());
    if (a != have) throw UsageError("--order must list every edge id exactly once");
    return ids;
}

int run_quasitrees(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order) {
    const RibbonGraph& g = cg.graph();
    if (g.components() != 1) throw UsageError("quasi-trees need a connected ribbon graph");
    auto trees = spanning_quasi_trees(g);
    std::cout << "quasi-trees: " << trees.size() << "\n";
    for (const QuasiTree& q : trees) std::cout << "  " << quasi_tree_text(q) << "\n";
    std::cout << "order (lowest first):";
    for (EdgeId e : order) std::cout << " e" << e;
    std::cout << "\n";
    bool sound = true;
    for (const ResolutionBranch& b : resolution_branches(cg, order)) {
        std::cout << "branch " << quasi_tree_text(branch_to_quasi_tree(cg, b)) << ":";
        for (const ResolutionStep& s : b.steps) {
            std::cout << " e" << s.edge << " " << to_string(s.action) << " " << activity_token(s.type);
            if (!s.sound) {
                std::cout << " (unsound)";
                sound = false;
            }
            std::cout << ";";
        }
        std::cout << "\n";
    }
    std::cout << "expansion: " << quasi_tree_expansion(cg, order).to_string() << "\n";
    std::cout << "P: " << p_normalized(cg).to_string() << "\n";
    if (!sound)
        std::cout << "note: a forced step joins two linked colour classes; the expansion need not equal P here\n";
    return 0;
}

int run_check(std::uint64_t seed, int count, int max_edges, int max_vertices) {
    SuiteReport rep = run_suite(random_corpus(seed, count, max_vertices, max_edges), seed);
    std::cout << "seed " << seed << ", " << rep.graphs << " graphs\n";
    for (const auto& [name, n] : rep.failures) {
        std::cout << "  " << name << ": " << (n == 0 ? "ok" : std::to_string(n) + " failures");
        if (rep.notes.count(name)) std::cout << " (" << rep.notes.at(name) << " notes)";
        std::cout << "\n";
    }
    for (const auto& m : rep.messages) std::cout << "FAIL " << m << "\n";
    for (const auto& m : rep.note_messages) std::cout << "note " << m << "\n";
    return rep.total_failures() == 0 ? 0 : 1;
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("RIBBON_CHECK_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed RIBBON_CHECK_SEED='" << s << "'\n";
        }
    }
    return 7;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coloured ribbon graph polynomials"};
    app.require_subcommand(1);

    std::string file, poly;
    std::optional<int> ambient;
    std::vector<int> order;

    auto* compute_cmd = app.add_subcommand("compute", "print a canonical polynomial");
    compute_cmd->add_option("--poly", poly, "tps|ts|tcps|tcs|U|P|br|krushkal")
        ->required()
        ->check(CLI::IsMember({"tps", "ts", "tcps", "tcs", "U", "P", "br", "krushkal"}));
    compute_cmd->add_option("--ambient-genus", ambient, "Euler genus of the ambient surface (krushkal)");
    compute_cmd->add_option("file", file, "ribbon file, or - for stdin")->required();

    auto* dual_cmd = app.add_subcommand("dual", "print the coloured dual");
    dual_cmd->add_option("file", file)->required();

    auto* classify_cmd = app.add_subcommand("classify", "print each edge's (contract, delete) class");
    classify_cmd->add_option("file", file)->required();

    auto* qt_cmd = app.add_subcommand("quasitrees", "list quasi-trees and resolution branches");
    qt_cmd->add_option("--order", order, "edge ids, lowest first (default ascending)");
    qt_cmd->add_option("file", file)->required();

    std::uint64_t seed = default_seed();
    int count = 100, max_edges = 6, max_vertices = 3;
    auto* check_cmd = app.add_subcommand("check", "run the invariant suite on a seeded random corpus");
    check_cmd->add_option("--seed", seed, "corpus seed (default $RIBBON_CHECK_SEED or 7)");
    check_cmd->add_option("--count", count)->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--max-edges", max_edges)->check(CLI::Range(0, 60));
    check_cmd->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 60));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check_cmd) return run_check(seed, count, max_edges, max_vertices);
        const ColouredRibbonGraph cg = load(file);
        if (*compute_cmd) {
            echo_walks(cg.graph());
            std::cout << compute(cg, poly, ambient).to_string() << "\n";
        } else if (*dual_cmd) {
            std::cout << serialize(dual_coloured(cg));
        } else if (*classify_cmd) {
            std::vector<EdgeId> ids = cg.graph().edge_ids();
            std::sort(ids.begin(), ids.end());
            for (EdgeId e : ids) {
                EdgeType t = edge_type(cg, e);
                std::cout << "e" << e << ": (" << to_string(t.contract_class) << ", " << to_string(t.delete_class)
                          << ")\n";
            }
        } else if (*qt_cmd) {
            return run_quasitrees(cg, edge_order(cg.graph(), order));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
