#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smg::cli {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kSolverFailure = 3;

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smg::cli
