#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kstab/invariants.hpp"
#include "kstab/rational.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab {

// F = ord_C for a smooth plane curve C of degree d >= 1 on plain P^2:
// vol(-K - xC) = (3 - dx)^2 on [0, 3/d], A = 1, betahat = (d-1)/d.
struct PlaneDivisorCase {
    int d = 1;
    explicit PlaneDivisorCase(int degree);
};

VolumeCurve plane_divisor_curve(const PlaneDivisorCase& c);
InvariantReport plane_divisor_report(const PlaneDivisorCase& c);

// F = exceptional divisor of the (a, b)-weighted blowup of a point of P^2,
// gcd(a, b) = 1, a >= b >= 1: A = a + b, F^2 = -1/(ab). The pseudo-effective
// threshold tau is an input, admissible in the window [3*sqrt(ab), 3a]
// (checked exactly as tau^2 >= 9ab, tau <= 3a).
struct WeightedBlowupDescriptor {
    long long a = 1;
    long long b = 1;
    std::optional<Rational> tau;

    WeightedBlowupDescriptor(long long a_, long long b_, std::optional<Rational> tau_ = {});
    Rational exceptional_self_intersection() const { return Rational(-1, a * b); }
    Rational log_discrepancy() const { return Rational(a + b); }
};

// The volume curve has a single knee at epsilon = 9ab/tau:
//     9 - x^2/(ab)                       on [0, epsilon],
//     9*(tau - x)^2 / (tau*(tau - eps))  on [epsilon, tau],
// collapsing to the first branch alone when tau^2 == 9ab. Value and first
// derivative agree at the knee. Requires desc.tau to be set and admissible.
struct WeightedBlowupResult {
    Rational epsilon;
    VolumeCurve curve;
    InvariantReport report;
};
WeightedBlowupResult weighted_blowup_report(const WeightedBlowupDescriptor& desc);

// betahat(tau) = 1 - (tau + 9ab/tau) / (3(a+b)) over the admissible window.
// tau + 9ab/tau increases there, so the minimum sits at tau = 3a and is
// exactly 0. The irrational lower endpoint 3*sqrt(ab) is reported as a
// rational bracket of at most `bracket_width`.
struct WindowSummary {
    long long a = 1;
    long long b = 1;
    Rational min_betahat;
    Rational tau_at_min;
    Rational epsilon_at_min;
    bool nonnegative = false;
    std::pair<Rational, Rational> tau_lo_bracket;
    std::pair<Rational, Rational> betahat_at_lo_bracket;
};
WindowSummary betahat_over_window(long long a, long long b,
                                  const Rational& bracket_width = Rational(1, 1000000));

// `count` admissible tau values spanning the window, largest = 3a; the lower
// end is the exact 3*sqrt(ab) when ab is a perfect square and a rational
// point just inside the window otherwise.
std::vector<Rational> admissible_tau_samples(long long a, long long b, int count);

// The tau = 3a weighted-blowup curve coincides with the toric slice curve of
// the monomial valuation v = (a, b) on plain P^2, and beta(v) = 0 along both
// toric routes; returns whether all of that holds exactly.
bool matches_toric_curve(long long a, long long b);

struct WbSweepEntry {
    long long a = 1;
    long long b = 1;
    WindowSummary summary;
    InvariantReport report_at_tau_max;  // tau = 3a
};

// All coprime (a, b), 1 <= b <= a <= max_a, in (a, b) order. Same result
// from both variants; the first runs with OpenMP, the second is the serial
// reference.
std::vector<WbSweepEntry> wb_sweep(long long max_a);
std::vector<WbSweepEntry> wb_sweep_serial(long long max_a);

}  // namespace kstab
