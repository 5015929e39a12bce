#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcat {

/// Runs one qcat command; `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`. Returns 0, 2 (input error) or 3
/// (computation error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcat
