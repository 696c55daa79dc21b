#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agt {

// Command-line front end. Returns the process exit code: 0 on success,
// 1 for validation or usage problems, 2 when an iteration or outer-loop
// budget ran out before the gap targets were met.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agt
