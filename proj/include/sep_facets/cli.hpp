#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sep {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int counterexample = 2;
inline constexpr int guard = 3;
} // namespace exit_code

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sep
