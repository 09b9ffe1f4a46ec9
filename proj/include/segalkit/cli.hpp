#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segal {

/// Full command-line driver; the report JSON goes to `out`.  Returns the
/// process exit code: 0 all checks passed, 1 a check failed (report still
/// written), 2 malformed input or arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace segal
