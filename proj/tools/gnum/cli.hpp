#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace gnum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "2", "2+0i", "1.1-7i", "3i".
std::complex<double> parse_complex(const std::string& text);

}  // namespace gnum::cli
