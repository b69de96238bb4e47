#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace foresthopf {

// Command-line front end. args excludes the program name. Exit codes:
// 0 success, 1 property violation, 2 usage or parse error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace foresthopf
