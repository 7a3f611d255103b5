#pragma once

#include <iosfwd>

namespace mdc {

// Parses argv and executes one subcommand, writing results to `out` and
// diagnostics to `err`.  Returns 0 on success, 1 on a domain error, 2 on a
// usage error (including malformed matrix/jump/graph input).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdc
