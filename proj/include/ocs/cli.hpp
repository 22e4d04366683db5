// ocs/cli.hpp — command-line entry point, callable in-process for tests.
//
// Exit codes are a stable contract:
//   0  success (including Extended import verdicts)
//   1  input error (parse failure, unknown OID, bad arguments, budget hit)
//   2  incoherence found / introduced
//   3  I/O failure
//   4  meaning-affecting change detected

#ifndef OCS_CLI_HPP
#define OCS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ocs::cli {

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ocs::cli

#endif // OCS_CLI_HPP
