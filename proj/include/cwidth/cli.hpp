#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cwidth {

// Runs the command line (args excludes the program name). Returns the exit code:
// 0 when every produced check passes, 1 on failed checks or numerical failure,
// 2 on bad flags or unusable output paths.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwidth
