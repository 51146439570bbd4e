#ifndef ENTANGLE_CLI_HPP
#define ENTANGLE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace entangle::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kNumericalError = 3,
    kHorizonLimited = 4,
};

/// Runs one command line (without the program name). Data goes to `--out`
/// or, for "-", to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entangle::cli

#endif  // ENTANGLE_CLI_HPP
