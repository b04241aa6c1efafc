#ifndef FEATURECLOUDS_CLI_H_
#define FEATURECLOUDS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace featureclouds::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kPipelineError = 3,
};

// Entry point of the `featureclouds` tool. `args` excludes the program
// name. Subcommands: tokens, name, cloud, eval.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace featureclouds::cli

#endif  // FEATURECLOUDS_CLI_H_
