#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSelfCheckFailed = 3;

inline constexpr int kDefaultMaxM = 30;

/// Enumeration cap from ORBITRES_MAX_M, or kDefaultMaxM.
int enumeration_cap();

/// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitres::cli
