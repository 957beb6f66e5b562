#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqcheck::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

// Runs the command line (arguments without the program name). Reports go to
// out, diagnostics to err. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sqcheck::cli
