#ifndef ASSEMBLIES_TOOLS_CLI_HPP_
#define ASSEMBLIES_TOOLS_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace assemblies::cli {

  enum ExitCode : int {
    ok            = 0,
    usage         = 1,
    invalid       = 2,
    cap_exceeded  = 3,
    inconsistency = 4,
  };

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace assemblies::cli

#endif  // ASSEMBLIES_TOOLS_CLI_HPP_
