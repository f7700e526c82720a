#pragma once

#include <iosfwd>

namespace viswork {

// Full command-line entry point, stream-injected for in-process testing.
// Exit codes: 0 success, 1 verification mismatch, 2 command-line error,
// 3 rejected input (load/parse/degeneracy), 4 internal invariant failure.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace viswork
