#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varcmp {

/// Runs one command line (without the program name). Exit codes:
/// 0 success / all checks pass, 1 a check failed or oracles disagree,
/// 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace varcmp
