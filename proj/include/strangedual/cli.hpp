#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strangedual::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strangedual::cli
