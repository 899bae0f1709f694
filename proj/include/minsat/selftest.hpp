#pragma once

#include <ostream>

namespace minsat {

/// Compiled-in verification gate: exhaustive small-instance oracle sweep
/// plus the core property suites. Prints one line per check; returns the
/// number of failed checks.
int run_selftest(std::ostream& log);

}  // namespace minsat
