#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lctkit {

// Exit codes: 0 success, 1 internal consistency failure, 2 bad input, 3 undecided because of truncation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lctkit
