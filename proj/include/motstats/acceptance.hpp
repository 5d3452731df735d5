#pragma once

#include <iosfwd>

namespace motstats {

// Number of checks in the verification battery.
int acceptance_criteria_count();

// Runs one check (1-based), printing a single pass/fail line.
bool run_acceptance_criterion(int index, std::ostream& out);

// Runs the full verification battery, printing one pass/fail line per
// criterion.  Returns true iff every criterion passed.
bool run_acceptance(std::ostream& out);

} // namespace motstats
