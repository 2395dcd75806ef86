// Acceptance suite: runs every criterion at its stated size and tolerance and
// prints one pass/fail line per criterion.

#include <iostream>

#include "derres/suite.hpp"

int main() {
    derres::SuiteOptions options;
    std::vector<derres::CriterionOutcome> outcomes = derres::run_acceptance(options);
    derres::print_outcomes(std::cout, outcomes);
    const bool ok = derres::all_passed(outcomes);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES") << "\n";
    return ok ? 0 : 1;
}
