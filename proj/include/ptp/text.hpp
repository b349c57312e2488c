#pragma once

#include <string>
#include <vector>

#include "ptp/gt_pattern.hpp"
#include "ptp/staircase.hpp"

namespace ptp {

// comma-separated integers; empty tuple renders as ""
std::string format_row(const Row& v);
Row parse_row(const std::string& s);

// rows joined by ';', top row first, e.g. "3,1;3"
std::string format_pattern(const GTPattern& m);
GTPattern parse_pattern(const std::string& s);

// staircases joined by ';', root first
std::string format_path(const std::vector<Staircase>& path);
std::vector<Staircase> parse_path(const std::string& s);

// nested form "((2,1),(2))"; empty side renders as "()"
std::string format_mixed(const MixedDiagram& m);
MixedDiagram parse_mixed(const std::string& s, int d);

std::vector<std::string> split(const std::string& s, char sep);

}  // namespace ptp
