// Structured pass/fail records for every machine-checked identity, with the
// offending witnesses kept for inspection.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace derres {

struct CheckResult {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::string status;  // "pass", "fail" or "assumed"
    std::vector<std::string> witnesses;
    std::uint64_t seed = 0;

    bool passed() const { return status != "fail"; }
    nlohmann::json to_json() const;
};

class VerificationReport {
public:
    CheckResult& add(std::string check, nlohmann::json params = nlohmann::json::object());
    void append(const VerificationReport& other);

    bool all_passed() const;
    const std::vector<CheckResult>& checks() const { return checks_; }

    nlohmann::json to_json() const;
    // One line per check: "pass  <name>  (witnesses...)".
    void print_text(std::ostream& os) const;

private:
    std::vector<CheckResult> checks_;
};

// Marks the check failed and records a witness; keeps at most `cap` witnesses
// so that exhaustive sweeps stay readable.
void record_failure(CheckResult& result, const std::string& witness, std::size_t cap = 32);

}  // namespace derres
