#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planeseg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNoPlanes = 3;

/// Subcommands: simulate, detect, merge-hull, sweep, scenes.
/// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace planeseg
