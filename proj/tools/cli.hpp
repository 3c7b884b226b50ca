#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hochdef::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kUsageError = 2;

// Parses argv, runs one subcommand and writes its report to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, used to key the HH^2 basis cache by quiver file content.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace hochdef::cli
