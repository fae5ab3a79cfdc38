#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synsq::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kNumericalFailure = 3;

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace synsq::cli
