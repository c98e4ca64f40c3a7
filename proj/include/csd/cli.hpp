// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

namespace csd {

// Entry point behind the command-line binary; returns the process exit code.
// Subcommands: validate, discord, sweep, make-state.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace csd
