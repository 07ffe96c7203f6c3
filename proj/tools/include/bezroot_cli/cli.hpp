#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bezroot::cli {

/// Runs one bezroot command; `args` excludes the program name. Returns 0 on
/// success, 1 when a checked assertion fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bezroot::cli
