#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperphase {

/// Exit statuses: 0 success, 1 validation error, 2 resource guardrail.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitResource = 2;

/// Runs the command line `args` (args[0] is the program name).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_dispatch(int argc, char** argv);

}  // namespace hyperphase
