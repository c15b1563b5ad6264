#pragma once

#include <string>
#include <vector>

namespace equicut {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness; // decimal renderings of the exact values involved
    std::string note;    // optional annotation, kept even when the check passes
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string text() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.passed ? "PASS " : "FAIL ";
            out += c.name;
            if (!c.witness.empty()) out += "  " + c.witness;
            if (!c.note.empty()) out += "  [" + c.note + "]";
            out += "\n";
        }
        out += all_passed() ? "verdict: PASS\n" : "verdict: FAIL\n";
        return out;
    }
};

} // namespace equicut
