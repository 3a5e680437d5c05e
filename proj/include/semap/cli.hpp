#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semap {

// Runs one command line. args[0] is the program name. Exit codes: 0 success,
// 1 domain error (the error name is printed), 2 usage or parse error.
// `in`/`out` stand for the "-" file arguments.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace semap
