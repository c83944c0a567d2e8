//
// semilab - finite semirings, semimodules and their structure theory
//

#ifndef SEMILAB_CLI_HPP_
#define SEMILAB_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace semilab::cli {

  enum ExitCode : int { success = 0, hard_failure = 1, input_error = 2 };

  //! Runs one command line (without the program name).  Reports go to
  //! \p out, diagnostics to \p err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace semilab::cli

#endif  // SEMILAB_CLI_HPP_
