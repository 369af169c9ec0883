#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bipolar::cli {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the --out path), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipolar::cli
