#pragma once

#include <iosfwd>

namespace tamagawa {

/// Entry point of the `tamagawa` tool. Exit codes: 0 success, 1 invalid
/// config or usage, 2 internal cross-check failure, 3 resource bound hit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tamagawa
