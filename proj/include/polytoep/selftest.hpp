#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polytoep {

struct SelftestOptions {
    std::uint64_t seed = 20250825;
    int cases = 40;      // per randomized suite
    bool perturb = false;  // inject a deliberate defect; the run must then fail
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> messages;  // first few failure details
};

struct SelftestResult {
    std::vector<SuiteResult> suites;

    bool ok() const {
        for (const auto& s : suites)
            if (s.failures) return false;
        return true;
    }
};

// Exact verification of the identities every downstream analysis depends on:
// the ladder intertwine relation, the leading/subleading coefficient formulas,
// the shift and factorization calculus for operator products, agreement of the
// three independent first-order kernel routes, and the float-side oracle
// consistency checks (quadrature and adjoint sections).
SelftestResult run_selftest(const SelftestOptions& opt);

std::string selftest_to_text(const SelftestResult& r);

}  // namespace polytoep
