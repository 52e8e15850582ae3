#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

/// Dispatches one CLI invocation (argv without the program name). Returns
/// the process exit status: 0 on success, 1 on a failed verification, 2 on
/// usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace turan::cli
