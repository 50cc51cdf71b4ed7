#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tk {

// Named self-check suites (fast consistency checks between independent
// computation routes).  Each check prints one [PASS]/[FAIL] line.
std::vector<std::string> verify_suites();

// Runs one suite (or "all"); returns the number of failed checks.
int run_verify_suite(const std::string& suite, std::ostream& os);

}  // namespace tk
