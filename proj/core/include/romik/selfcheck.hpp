#pragma once

#include <string>
#include <vector>

namespace romik {

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full verification suite (exact identities, paper tables, oracle
/// agreement) and returns one result per criterion.
std::vector<CheckResult> run_selfcheck(unsigned threads = 0);

/// Prints one PASS/FAIL line per criterion; returns true when all pass.
bool report_selfcheck(std::ostream& os, unsigned threads = 0);

} // namespace romik
