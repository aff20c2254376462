#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pw1::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

// Runs one command line (without the program name). "-" as a file name reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pw1::cli
