#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace citekit::cli {

// Exit codes, also listed in --help and the README.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;       // bad flags / unknown subcommand or figure
inline constexpr int kExitData = 3;        // unreadable or malformed input, unknown id
inline constexpr int kExitDomain = 4;      // invariant violation, degenerate comparison
inline constexpr int kExitValidation = 5;  // validate ran, some indicator failed tolerance

/// Run the citekit command line with explicit streams; returns the exit
/// code. The binary's main() forwards here.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace citekit::cli
