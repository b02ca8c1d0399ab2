// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "arthur/checks.hpp"

int main() {
    auto results = arthur::run_all_checks(20240915);
    bool allPass = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d. %s (%s) (%.0f ms)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), r.millis);
        allPass = allPass && r.pass;
    }
    std::printf("%s\n", allPass ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return allPass ? 0 : 1;
}
