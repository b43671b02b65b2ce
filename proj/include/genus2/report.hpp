#pragma once

#include <optional>
#include <string>
#include <vector>

namespace genus2 {

/// One verified claim with its numeric evidence.
struct CheckRecord {
    std::string name;
    bool pass = false;
    double margin = 0.0;
    std::string detail;  // offending indices or context, empty when clean
};

/// Structured pass/fail record; overall pass is the conjunction of all
/// checks, serialization is deterministic (fixed check order).
struct VerificationReport {
    std::vector<CheckRecord> checks;

    void add(const std::string& name, bool pass, double margin, const std::string& detail = "");
    bool overall_pass() const;
    const CheckRecord* find(const std::string& name) const;
    std::string serialize() const;
};

}  // namespace genus2
