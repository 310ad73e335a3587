#pragma once

#include <functional>
#include <string>

#include "config.hpp"

namespace diracspec::harness {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitZigzag = 2, kExitNumerical = 3 };

/// Each command writes its files under config.output.directory and returns
/// kExitOk when every check passes, kExitNumerical otherwise. ConfigError,
/// ZigzagError and ConvergenceError propagate to the caller.
int cmd_spectrum(const RunConfig& config);
int cmd_verify(const RunConfig& config, const std::string& suite);
int cmd_weyl(const RunConfig& config);
int cmd_conformal_check(const RunConfig& config);

/// Runs `body` and maps exceptions to exit codes, printing the message:
/// ConfigError and other invalid arguments 1, ZigzagError 2, ConvergenceError 3.
int guarded(const std::string& command, const std::function<int()>& body);

}  // namespace diracspec::harness
