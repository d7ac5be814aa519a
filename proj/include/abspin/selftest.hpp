#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace abspin {

// ---------------------------------------------------------------------------
// Built-in invariant suite backing the `selftest` CLI verb
// ---------------------------------------------------------------------------

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail; // worst observed deviation or failure reason
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool all_passed() const;
};

// Runs randomized invariant checks (unitarity, Hermiticity, gauge
// invariance, closed-form versus oracle propagation, ...). The seed fixes
// the random draws, so a given seed is reproducible.
SelftestReport run_selftest(std::uint64_t seed);

// One PASS/FAIL line per check plus a summary line.
void print_selftest(const SelftestReport& report, std::ostream& os);

} // namespace abspin
