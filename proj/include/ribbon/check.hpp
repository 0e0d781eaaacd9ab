#pragma once

#include "ribbon/coloured.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ribbon {

// Each property returns human-readable failure messages (empty when it
// holds), plus notes: known, explained deviations that are not failures.
// `salt` drives the random edge orders and join partners.
struct CheckResult {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};
using PropertyCheck = std::function<CheckResult(const ColouredRibbonGraph&, std::uint64_t salt)>;

CheckResult check_oracle_triangle(const ColouredRibbonGraph& cg, std::uint64_t salt);
CheckResult check_duality_laws(const ColouredRibbonGraph& cg, std::uint64_t salt);
CheckResult check_hierarchy(const ColouredRibbonGraph& cg, std::uint64_t salt);
CheckResult check_classical_reduction(const ColouredRibbonGraph& cg, std::uint64_t salt);
CheckResult check_bollobas_riordan(const ColouredRibbonGraph& cg, std::uint64_t salt);
CheckResult check_structural(const ColouredRibbonGraph& cg, std::uint64_t salt);
CheckResult check_join(const ColouredRibbonGraph& cg, std::uint64_t salt);

// name -> check, in reporting order
const std::vector<std::pair<std::string, PropertyCheck>>& all_properties();

struct SuiteReport {
    int graphs = 0;
    std::map<std::string, int> failures; // per property
    std::vector<std::string> messages;   // first few failures, in corpus order
    std::map<std::string, int> notes;    // per property
    std::vector<std::string> note_messages;
    int total_failures() const;
};

SuiteReport run_suite(const std::vector<ColouredRibbonGraph>& corpus, std::uint64_t seed,
                      const std::vector<std::string>& properties = {}, int keep_messages = 20);

std::vector<ColouredRibbonGraph> random_corpus(std::uint64_t seed, int count, int v_max, int e_max);

// Random permutation of the edge ids of g.
std::vector<EdgeId> random_order(const RibbonGraph& g, std::uint64_t salt);

} // namespace ribbon
