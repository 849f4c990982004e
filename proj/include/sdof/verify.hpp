#pragma once

#include <string>
#include <vector>

namespace sdof {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failure_count() const;
};

// Dimension census across every supported topology (helpers <= 4, users <= 4)
// and `seed_count` gain draws: decoding dimension counts, intended message
// symbols in singleton dimensions, and eavesdropper-side message symbols
// sharing a dimension with a jamming symbol.
SuiteReport verify_alignment(int seed_count);

// Exact per-transmitter E[X^2] <= P over a 7-point power grid per topology.
SuiteReport verify_power(int seed_count);

// Measured eavesdropper information <= scheme cap (+3 std errors) at
// P in {1e2, 1e4, 1e6}, plus the discrete-entropy ceiling.
SuiteReport verify_leakage(int seed_count);

// Estimator cross-checks: sorted-scan minimum distance vs the all-pairs
// oracle, quadrature vs Monte-Carlo mixture entropy, and the closed-form
// two-summand lattice law. `case_count` cases per check.
SuiteReport verify_oracle(int case_count);

// Information-inequality checks with random finite-support inputs: for each
// seed, 20 secrecy-penalty cases (with every dropped-input corollary),
// 20 helper-role cases, and 10 interference sum-rate cases, plus the
// reconstruction-constant closed form and its power invariance.
SuiteReport verify_lemmas(int seed_count);

std::vector<SuiteReport> verify_all(int seed_count);

}  // namespace sdof
