#pragma once

#include <string>
#include <vector>

namespace bruhat::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, first failure otherwise
    double seconds = 0.0;
};

/// The built-in verification suite: every published number the engine is
/// expected to reproduce, one result per check. Never throws; failures and
/// exceptions are reported in the results.
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

} // namespace bruhat::verify
