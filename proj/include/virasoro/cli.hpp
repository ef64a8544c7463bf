#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace virasoro {

/// Runs the command line given argv-style arguments (without the program
/// name). Exit codes: 0 all checks pass, 1 check failure, 2 usage error,
/// 3 window exhaustion.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace virasoro
