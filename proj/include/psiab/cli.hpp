#pragma once

#include <iosfwd>

namespace psiab {

// Exit codes of the command-line front end.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // computational or verification failure
constexpr int kExitUsage = 2;

/// Entry point of the `psiab` tool, with output streams injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace psiab
