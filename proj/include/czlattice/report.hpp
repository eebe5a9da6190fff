#pragma once

#include <map>
#include <string>
#include <vector>

namespace czlattice {

/// One verified identity instance.
struct CheckResult {
    std::string name;
    std::map<std::string, long long> params; // binding values, sizes, ...
    double residual = 0.0;                   // 0 for exponent-level checks
    bool exact = false;                      // true when verified with zero tolerance
    bool pass = false;
    std::string note;
};

struct Report {
    std::string suite;
    int N = 0;
    int q_exponent_s = 0; // q = w^s
    int q_exponent_M = 0; // w = e^{i pi/M}
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
};

} // namespace czlattice
