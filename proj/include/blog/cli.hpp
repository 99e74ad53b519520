#pragma once

namespace blog {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

int cli_dispatch(int argc, const char* const* argv);

}  // namespace blog
