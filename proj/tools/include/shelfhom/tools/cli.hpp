#pragma once

#include <ostream>

namespace shelfhom::tools {

/// Runs `shelftool` with the given arguments. Reports go to --output or `out`; errors are
/// written to `err` as JSON. Returns 0 on success, 2 for input errors, 3 when a resource
/// cap is hit and 4 for internal failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shelfhom::tools
