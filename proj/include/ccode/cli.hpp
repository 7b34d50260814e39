#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccode {

// Dispatch one command. args excludes the program name. Results go to out,
// diagnostics to err. Returns 0 on success, 1 on validation failure, 2 on
// usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ccode
