#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutloc {

/// Runs the command line; returns the exit code (0 ok, 1 an identity or hypothesis
/// failed, 2 configuration or parse error). args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutloc
