#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyctrl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacity = 3;

// Runs one command line. `args` excludes the program name. Input files named
// "-" are read from `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace polyctrl::cli
