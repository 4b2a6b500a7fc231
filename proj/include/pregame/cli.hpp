#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pregame::cli {

inline constexpr std::uint64_t kDefaultSeed = 2016;

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 semantic failure, 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pregame::cli
