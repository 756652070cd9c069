#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffga {

// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
// error.  `args` excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cliffga
