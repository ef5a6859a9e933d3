#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ipseg::cli {

/// Runs one command line. Returns 0 on success, 1 on domain errors (bad input
/// file, bound exceeded) and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ipseg::cli
