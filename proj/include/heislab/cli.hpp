#pragma once

#include <string>
#include <vector>

namespace heislab {

/// Runs one CLI command. Exit codes: 0 success, 1 violated bound or I/O
/// failure, 2 configuration error (unknown command, bad flag, off-grid
/// point without --quantize, unreadable config).
int cli_run(const std::vector<std::string>& args);

} // namespace heislab
