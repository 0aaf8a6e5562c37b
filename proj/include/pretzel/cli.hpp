#ifndef PRETZEL_CLI_HPP
#define PRETZEL_CLI_HPP

#include <ostream>

namespace pretzel {

// Command-line entry point (classify/scan/dinv/embed/twist/order).
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 hypothesis
// violation (unsupported graph, non-definite form).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pretzel

#endif
