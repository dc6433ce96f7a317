#ifndef MPROJ_CLI_HPP
#define MPROJ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mproj::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kOk = 0,            // computed a result (including NON_ISOMORPHIC verdicts)
    kDomainFailure = 1, // e.g. a character that does not factor
    kUsageError = 2,    // bad arguments or unparsable input
};

/// Runs the tool on args (args[0] is the program name), writing the result
/// document to out and diagnostics to err. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mproj::cli

#endif  // MPROJ_CLI_HPP
