#ifndef SYMCHAR2_TOOLS_CLI_HPP
#define SYMCHAR2_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace symchar2::cli {

enum ExitCode : int {
    kOk = 0,
    kNotRealizable = 2,
    kParseError = 3,
    kValidationFailure = 4,
};

/// Runs one command line (args excludes the program name). Diagnostics go to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace symchar2::cli

#endif
