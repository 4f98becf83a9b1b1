#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hotspots/geometry.hpp"

namespace hotspots {

/// {"type", "params", "bc": {"e1": "D" | "N", ...}, "dirichlet_segments": [[x0,y0,x1,y1], ...]}.
/// "bc" may also carry "all" as the default for unlisted edges.
nlohmann::json domain_to_json(const DomainSpec& spec);
DomainSpec domain_from_json(const nlohmann::json& doc);

/// Catalog constructor: rect takes (width, height), every other kind four L lengths.
DomainSpec build_domain(DomainKind kind, const std::vector<double>& params);

/// "rect:2,1" or "L:1,2,3,4" (boundary conditions left at their defaults).
DomainSpec parse_domain_arg(const std::string& text);
/// "all:N", "e1:D,e5:D", or "all:N,e1:D".
BcAssignment parse_bc_arg(const std::string& text);
std::vector<double> parse_number_list(const std::string& text);

/// Twelve significant digits.
std::string format_number(double v);

}  // namespace hotspots
