#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperring::cli {

inline constexpr int kExitOk = 0;
/// The command ran and the checked property does not hold.
inline constexpr int kExitFailed = 1;
/// Bad arguments, unreadable or malformed input, precondition violations.
inline constexpr int kExitInput = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperring::cli
