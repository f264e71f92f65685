#ifndef BITENSOR_CLI_COMMANDS_HPP
#define BITENSOR_CLI_COMMANDS_HPP

#include <string>
#include <vector>

#include "bitensor/checks.hpp"

namespace bitensor::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;  // the output document, newline-terminated
  std::string err;
};

/// Runs one command line (without the program name).
///
/// Exit codes: 0 on success, 1 when a check or cross-check fails, 2 on a
/// usage or expression error.
CommandResult run_command(const std::vector<std::string>& args);

/// As above with the antipodes replaced, for testing the check harness.
CommandResult run_command(const std::vector<std::string>& args, const checks::HopfMaps& maps);

}  // namespace bitensor::cli

#endif  // BITENSOR_CLI_COMMANDS_HPP
