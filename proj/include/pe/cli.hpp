#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pe {

/// Command-line front end.  `args` is the argument list without the program
/// name.  Returns the process exit code: 0 pass, 1 semantic failure
/// (verification or isomorphism), 2 oracle mismatch, 3 parse error, 4 range
/// error, 5 axiom violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pe
