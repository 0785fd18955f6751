#pragma once

#include <iosfwd>

namespace endosign::cli {

enum ExitCode : int { kPass = 0, kCounterexample = 1, kInputError = 2 };

/// Entry point shared by the executable and the tests. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace endosign::cli
