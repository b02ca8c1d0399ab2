#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arthur {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

// The acceptance criteria, each against its independent oracle.
CheckResult check_rho_shift(int maxRank = 12);
CheckResult check_torsion(int maxTotalRank = 6);
CheckResult check_sign_consistency(int maxRank = 25);
CheckResult check_packet_counts(int maxSpRank = 8, int maxSoRank = 10);
CheckResult check_descent(std::uint64_t seed, int trials = 1000);
CheckResult check_recursion(int maxTotalRank = 10);
CheckResult check_endoscopy(int maxRank = 10);
CheckResult check_compgroup_algebra(std::uint64_t seed, int trials = 500);
CheckResult check_multiplicity_one(std::uint64_t seed, int trials = 200);
CheckResult check_twist_table();
CheckResult check_cli_roundtrip(std::uint64_t seed, int trials = 1000);

std::vector<CheckResult> run_all_checks(std::uint64_t seed, int maxRank = 0);

}  // namespace arthur
