#pragma once

#include <string>
#include <vector>

namespace tdr {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 success, 1 user error, 2 internal certificate failure.
int cli_main(const std::vector<std::string>& args);

}  // namespace tdr
