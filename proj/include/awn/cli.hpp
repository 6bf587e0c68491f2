#pragma once

#include <iosfwd>

namespace awn::cli {

// Entry point of the `awn` tool. Returns the process exit status: 0 on
// success, 1 on a fatal error (printed as "error: <code>: <message>"), 2 on
// a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace awn::cli
