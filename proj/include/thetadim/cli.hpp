#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetadim {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // invalid parameters, unresolved set, bad network shape
inline constexpr int kExitUsage = 2;   // malformed command line or input file

// Runs the command line; args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetadim
