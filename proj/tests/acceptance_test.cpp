// Runs the full verification suite and prints one pass/fail line per check.

#include <cstdio>

#include "bruhat/verify.hpp"

int main() {
    const auto results = bruhat::verify::run_all();
    for (const auto& r : results) {
        std::printf("%s  %-48s %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
    }
    if (!bruhat::verify::all_passed(results)) {
        std::printf("FAILED\n");
        return 1;
    }
    std::printf("all checks passed\n");
    return 0;
}
