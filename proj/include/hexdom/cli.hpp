#pragma once

#include <string>
#include <vector>

namespace hexdom {

/// Command dispatcher behind the hexdom binary. Returns the process exit
/// code: 0 success / valid, 1 violation, 2 usage error.
int run_cli(const std::vector<std::string>& args);

} // namespace hexdom
