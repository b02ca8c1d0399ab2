#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arthur {

// Exit codes: 0 success, 1 parse error, 2 invalid parameter, 3 unsupported
// input, 4 check failure.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arthur
