#pragma once
// In-process entry point for the command-line tool, so tests can drive the
// full surface without spawning processes. Exit codes: 0 = success,
// 1 = negative mathematical finding (counterexample, non-free, not found,
// failed verification), 2 = usage or input error.

#include <iosfwd>

namespace clawkit {

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out);

}  // namespace clawkit
