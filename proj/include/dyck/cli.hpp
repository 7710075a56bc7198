#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyck::cli {

inline constexpr const char* kToolName = "dyck";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceLimit = 3 };

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dyck::cli
