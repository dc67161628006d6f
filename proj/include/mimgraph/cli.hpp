#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mimgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitRouting = 2;
inline constexpr int kExitUsage = 64;

/// Runs one `mimgraph` invocation; `args` excludes the program name.
/// Missing input/output paths (or "-") mean `in` / `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mimgraph
