#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wschub {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long long ms = 0;
};

// The acceptance suite: every check is exact (zero tolerance). Returns one
// result per criterion, in order.
std::vector<CriterionResult> run_acceptance(unsigned long long seed = 20240915ULL);

// Prints one PASS/FAIL line per criterion; returns 0 iff all pass.
int print_acceptance(std::ostream& os, unsigned long long seed = 20240915ULL);

}  // namespace wschub
