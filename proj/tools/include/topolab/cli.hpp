#ifndef TOPOLAB_CLI_HPP
#define TOPOLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace topolab::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kRefuted = 2,
  kDiscrepancy = 3,
  kUsage = 64,
  kDataError = 65,
};

/// Runs one `topolab` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topolab::cli

#endif  // TOPOLAB_CLI_HPP
