#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blf {

/// Command-line entry point without the program name. Returns the exit code:
/// 0 ok, 1 violations or failed checks, 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blf
