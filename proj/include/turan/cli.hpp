#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

/// Entry point of the `turan` tool. `args` is argv including the program
/// name. Returns 0 on success, 1 on a computational failure (including a
/// failed hard assertion) and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan
