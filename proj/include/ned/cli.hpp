#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ned {

// command line front end; returns the process exit code
// (0 ok, 2 bad usage or arguments, 1 I/O failures)
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ned
