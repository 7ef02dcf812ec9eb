#pragma once

#include <span>
#include <vector>

#include "kstab/rational.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab {

// S(F): expected vanishing order, (1/L^n) * integral of vol over [0, tau].
Rational expected_vanishing(const VolumeCurve& curve);

// S <= (n/(n+1)) * tau. Holds for every geometric volume curve.
bool check_tau_upper(const VolumeCurve& curve);

// vol(x) >= (1 - x/tau)^n * L^n at each sample; samples must lie in [0, tau].
bool check_fujita_lower(const VolumeCurve& curve, std::span<const Rational> samples);

// Decides a^(1/n) >= b^(1/n) + c^(1/n) for nonnegative rationals without
// leaving exact arithmetic (n <= 3).
bool nth_root_superadditive(int n, const Rational& a, const Rational& b, const Rational& c);

struct ConcavityTriple {
    Rational x;
    Rational y;
    Rational lambda;  // in [0, 1]
};

// vol^(1/n) is concave on [0, tau]: checks
//   vol(lx + (1-l)y)^(1/n) >= l*vol(x)^(1/n) + (1-l)*vol(y)^(1/n)
// exactly at each triple. Supports n <= 3.
bool check_log_concavity(const VolumeCurve& curve, std::span<const ConcavityTriple> triples);

}  // namespace kstab
