#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace restrictlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for bad flags or arguments; run() maps it to kExitUsage.
struct UsageError {
  std::string message;
};

/// "15", "5..9" and comma lists of both. Values must be >= minimum.
std::vector<std::uint64_t> parse_int_list(const std::vector<std::string>& tokens,
                                          std::uint64_t minimum);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace restrictlab::cli
