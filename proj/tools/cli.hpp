#pragma once

#include <ostream>

namespace modclass::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "modclass.report/1";

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modclass::cli
