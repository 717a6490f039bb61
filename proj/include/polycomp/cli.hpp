#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycomp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name. Input files named "-" (the default) read
// from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polycomp::cli
