#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kstab {

struct SuiteResult {
    std::string name;
    int cases = 0;   // individual property checks executed
    int curves = 0;  // geometric reports the checks ran against
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Battery over generated geometric fixtures — seeded random P^1 pairs plus
// toric sweeps on P^2 (plain and with boundary), P^1 x P^1 (plain and with
// boundary) and P^3: tau upper bound, Fujita-type volume lower bound at 10
// samples, quick positive bound when tau <= A, the j identity, both
// threshold-implication directions on a parameter grid, and log-concavity
// triples. Deterministic for a fixed seed.
SuiteResult verify_inequalities(std::uint64_t seed, int p1_samples = 60);

// Weighted-blowup closed form vs the toric slice oracle for every coprime
// (a, b) with 1 <= b <= a <= max_a.
SuiteResult verify_toric_vs_p2wb(long long max_a);

// Scaled lattice-point counts on P^2 at level k approximate the exact slice
// curve within 10% relative error at x in {0, 1/2, 1} for v = (1,0), (2,1).
SuiteResult verify_lattice_limit(long long k);

}  // namespace kstab
