#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tecsim::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kConfigError = 2,
  kSimulationFault = 3,
  kCheckFailed = 4,
};

/// Entry point behind the `tecsim` executable. Normal output goes to `out`;
/// diagnostics and machine-readable errors go to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tecsim::cli
