#pragma once

#include "ribbon/coloured.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbon {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "ribbon v1" text format.  Edge ids are compacted to 1..m on output and the
// partition lines are written only when they are not discrete.
ColouredRibbonGraph parse_ribbon(std::string_view text);
std::string serialize(const ColouredRibbonGraph& cg);

// Renumbers edges 1..m in increasing id order.
RibbonGraph compact_labels(const RibbonGraph& g);

std::string format_partition(const Partition& p);

} // namespace ribbon
