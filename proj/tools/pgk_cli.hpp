#ifndef PGK_CLI_HPP
#define PGK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pgk {

// Runs one CLI invocation (args exclude the program name) writing results
// to `out` and diagnostics to `err`.  Exit code 0 on success, 1 when a
// decision command answers false, 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pgk

#endif  // PGK_CLI_HPP
