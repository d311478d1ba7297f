#pragma once

#include <iosfwd>

namespace vantage::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;      // a verification did not hold
inline constexpr int kExitUsage = 2;       // unknown subcommand or bad flags
inline constexpr int kExitBadInput = 3;    // unreadable or malformed input file
inline constexpr int kExitExhausted = 4;   // randomized generator ran out of attempts

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vantage::cli
