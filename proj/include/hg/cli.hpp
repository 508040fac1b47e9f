#pragma once

#include <iosfwd>
#include <string>

namespace hg {

inline constexpr const char* kVersion = "0.1.0";

// Parses argv, executes the command and renders the report to `out`.
// Returns the process exit code: 0 success, 1 scenario failure, 2 usage or
// cap errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hg
