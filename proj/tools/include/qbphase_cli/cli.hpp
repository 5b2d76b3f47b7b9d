#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbphase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitConvergence = 4;

/// Runs one command line (arguments after the program name). The artifact
/// goes to --out if given, otherwise to `out`; failures are reported as a
/// JSON object on `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbphase::cli
