#pragma once

#include <iosfwd>

namespace picseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `picseq` tool. Returns 0 when every requested verdict
/// passes, 1 when one fails, 2 on usage, parse or validation errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace picseq::cli
