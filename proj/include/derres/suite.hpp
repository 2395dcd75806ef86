// The full desk-scale verification suite: every construction the library
// exposes is rebuilt and every claimed identity is machine-checked, with
// per-criterion pass/fail lines and wall-clock budgets.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "derres/report.hpp"

namespace derres {

struct SuiteOptions {
    std::uint64_t prime = 2147483647ull;  // 2^31 - 1
    int trials = 5;
    int points = 20;
    std::uint64_t seed = 0;
};

struct CriterionOutcome {
    int index = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0 = no budget
    std::vector<std::string> details;
};

// Runs the whole suite (all criteria, at their stated sizes).
std::vector<CriterionOutcome> run_acceptance(const SuiteOptions& options);

bool all_passed(const std::vector<CriterionOutcome>& outcomes);
void print_outcomes(std::ostream& os, const std::vector<CriterionOutcome>& outcomes);
nlohmann::json outcomes_json(const std::vector<CriterionOutcome>& outcomes);

// Verification scoped to a single n and bar degree limit, for the command
// line's targeted mode.
VerificationReport run_scoped_verify(int n, int degree, const SuiteOptions& options);

}  // namespace derres
