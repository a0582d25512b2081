#pragma once

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "thilb/intlinalg.hpp"

namespace thilb::cli {

// reads {"name": optional, "basis": [[a,b], ...]} and normalizes;
// normalization steps are reported on err
std::pair<GaleLattice, NormalizationLog> parse_input(const std::string& path,
                                                     std::ostream& err);

// full command dispatch; returns the process exit code
// (0 ok, 1 verification failure, 2 invalid input/usage)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thilb::cli
