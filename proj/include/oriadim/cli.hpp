#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oriadim {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitCapability = 2,
  kExitStructural = 3,
};

/// The oriadim command line: argv[0] is the program name. Primary output
/// goes to out, diagnostics (and the orient report unless --report-file is
/// given) to err.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oriadim
