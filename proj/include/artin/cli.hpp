#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace artin {

/// Runs the command-line tool in-process (no exit() calls): `args` excludes
/// the program name.  Returns the exit status: 0 on success (including
/// NONTRIVIAL and NOT-MEMBER answers), 2 on usage or parse errors, 3 when a
/// decomposition bottoms out in an unsupported leaf, 4 on resource caps.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin
