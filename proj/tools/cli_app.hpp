#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubicsurf::cli {

/// Full command dispatch; returns the process exit code (0 ok, 1 failed
/// verification / no-extension, 2 usage or parse error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicsurf::cli
