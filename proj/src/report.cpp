#include "genus2/report.hpp"

#include <cstdio>

namespace genus2 {

void VerificationReport::add(const std::string& name, bool pass, double margin,
                             const std::string& detail) {
    checks.push_back({name, pass, margin, detail});
}

bool VerificationReport::overall_pass() const {
    for (const CheckRecord& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
    for (const CheckRecord& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string VerificationReport::serialize() const {
    std::string out = "genus2-report v1\n";
    char buf[64];
    for (const CheckRecord& c : checks) {
        std::snprintf(buf, sizeof(buf), "%.17g", c.margin);
        out += "check " + c.name + (c.pass ? " pass" : " fail") + " margin " + buf;
        if (!c.detail.empty()) out += " detail " + c.detail;
        out += "\n";
    }
    out += overall_pass() ? "overall pass\n" : "overall fail\n";
    return out;
}

}  // namespace genus2
