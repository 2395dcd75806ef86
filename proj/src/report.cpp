#include "derres/report.hpp"

namespace derres {

nlohmann::json CheckResult::to_json() const {
    return nlohmann::json{{"check", check},
                          {"params", params},
                          {"status", status},
                          {"witnesses", witnesses},
                          {"seed", seed}};
}

CheckResult& VerificationReport::add(std::string check, nlohmann::json params) {
    CheckResult result;
    result.check = std::move(check);
    result.params = std::move(params);
    result.status = "pass";
    checks_.push_back(std::move(result));
    return checks_.back();
}

void VerificationReport::append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks_)
        if (!c.passed()) return false;
    return true;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks_) arr.push_back(c.to_json());
    return arr;
}

void VerificationReport::print_text(std::ostream& os) const {
    for (const auto& c : checks_) {
        os << c.status << "  " << c.check;
        if (!c.params.empty()) os << "  " << c.params.dump();
        os << "\n";
        for (const auto& w : c.witnesses) os << "    witness: " << w << "\n";
    }
}

void record_failure(CheckResult& result, const std::string& witness, std::size_t cap) {
    result.status = "fail";
    if (result.witnesses.size() < cap) result.witnesses.push_back(witness);
}

}  // namespace derres
