#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdr {

/// Runs one CLI command (args exclude the program name) writing to the given
/// streams.  Exit status: 0 = success / everything verified, 1 = at least one
/// verification failure, 2 = usage or parameter error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdr
