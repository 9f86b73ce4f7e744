#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opdi {

// Exit codes shared by every command.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

// Runs one command; args excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opdi
