#ifndef KAPPA_CLI_HPP_
#define KAPPA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace kappa::cli {

  enum ExitCode : int {
    success      = 0,
    fails        = 1,
    usage        = 2,
    unknown      = 3,
    precondition = 4,
  };

  //! Runs one invocation; \p args includes the program name. Results go to
  //! \p out, diagnostics to \p err.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace kappa::cli

#endif  // KAPPA_CLI_HPP_
