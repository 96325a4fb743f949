#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace riskfront::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kValidationError = 2;
inline constexpr int kCapacityError = 3;
inline constexpr int kInfeasible = 4;

// Parses arguments (argv[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace riskfront::cli
