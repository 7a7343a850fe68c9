#include "ainfty/report.hpp"

#include <sstream>

namespace ainfty {

std::string Report::text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " (" << seconds << "s)\n";
    for (const auto& c : checks) {
        os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << " {" << c.formulation << "}"
           << " cases=" << c.cases << "\n";
        for (const auto& n : c.notes) os << "        note: " << n << "\n";
        for (const auto& x : c.counterexamples)
            os << "        at " << x.inputs << ": lhs = " << x.lhs << ", rhs = " << x.rhs << "\n";
    }
    return os.str();
}

}  // namespace ainfty
