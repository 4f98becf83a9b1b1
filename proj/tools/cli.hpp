#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hotspots::cli {

/// Exit codes: 0 all pass, 1 any fail, 2 inconclusive or degenerate only,
/// 3 usage or configuration errors, 4 runtime errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hotspots::cli
