#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srsdual::cli {

/// Exit codes: 0 found/true, 1 exhausted/false, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srsdual::cli
