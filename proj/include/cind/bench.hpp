#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cind {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Named verification suites backing both `cind bench` and the acceptance
// test binary. Suites: fixtures, oracle, greedy, clawfree, tightness,
// matching, reduction, or "all". Fully deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(const std::string& suite, std::uint64_t seed);

// One "PASS name  detail" / "FAIL name  detail" line per criterion.
// Returns true iff everything passed.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace cind
