#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpsmeta {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or analysis failure
inline constexpr int kExitUsage = 2;    // bad arguments, query/schema syntax
inline constexpr int kExitIo = 3;       // unreadable or unwritable files

// Runs the full command-line interface against explicit streams so tests can
// drive it in-process. argv excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpsmeta
