#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relpoly {

/// Runs one CLI invocation. argv-style arguments without the program name.
/// Exit status: 0 success, 1 domain error, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relpoly
