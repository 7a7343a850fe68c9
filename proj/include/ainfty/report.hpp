#pragma once

/* Verification reports: one entry per check, each tagged with the formulation
 * it evaluated.  A failing entry always carries at least one counterexample
 * with exact values. */

#include <cstddef>
#include <string>
#include <vector>

namespace ainfty {

struct Counterexample {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct CheckEntry {
    std::string name;
    std::string formulation;  // "unsuspended-relations" | "suspended-bar"
    bool ok = true;
    std::size_t cases = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;

    void fail(Counterexample c, std::size_t cap = 8) {
        ok = false;
        if (counterexamples.size() < cap) counterexamples.push_back(std::move(c));
    }
};

struct Report {
    bool pass = true;
    double seconds = 0.0;
    std::vector<CheckEntry> checks;

    void add(CheckEntry e) {
        pass = pass && e.ok;
        checks.push_back(std::move(e));
    }

    std::string text() const;
};

}  // namespace ainfty
