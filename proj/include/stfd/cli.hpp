#pragma once

#include <string>
#include <vector>

namespace stfd::cli {

// Runs one subcommand given arguments in natural order (program name
// excluded). Exit codes: 0 success, 1 verification or lint failure,
// 2 usage error, 3 parameter-domain error, 4 numerical-convergence or
// mass-check failure.
int run_cli(std::vector<std::string> args);

}  // namespace stfd::cli
