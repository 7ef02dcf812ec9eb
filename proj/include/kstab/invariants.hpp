#pragma once

#include <optional>

#include "kstab/rational.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab {

// Valuative invariants of one divisorial/quasi-monomial valuation F on a log
// Fano pair of dimension n, all exact:
//   S       expected vanishing order,
//   beta    A * L^n - integral of vol,
//   betahat 1 - S / A,
//   j       (tau - S) * L^n.
// The identity j == (tau - A) * L^n + beta holds by construction.
struct InvariantReport {
    int n = 0;
    Rational Ln;
    Rational A;
    Rational tau;
    Rational S;
    Rational beta;
    Rational betahat;
    Rational j;
};

// Requires A > 0, curve.dimension() == n, curve.total_volume() == Ln.
InvariantReport make_report(int n, const Rational& Ln, const Rational& A,
                            const VolumeCurve& curve);

// (1 + d') * A - d' * tau >= S, the delta-threshold inequality at slope d' >= 0.
bool delta_threshold_holds(const InvariantReport& r, const Rational& delta_prime);

// A >= (1 + e') * S, the epsilon-threshold inequality at margin e' >= 0.
bool epsilon_threshold_holds(const InvariantReport& r, const Rational& epsilon_prime);

// When tau <= A the betahat of the valuation is at least 1/(n+1); returns
// that bound. Throws std::domain_error when tau > A.
Rational quick_positive_bound(const InvariantReport& r);

// Threshold bookkeeping on both scales: x' = x / (1 - x) and x = x' / (1 + x').
// theta is the auxiliary interpolation weight and is only set on the
// delta -> epsilon direction.
struct ThresholdParams {
    int n = 0;
    Rational delta;
    Rational delta_prime;
    Rational epsilon;
    Rational epsilon_prime;
    std::optional<Rational> theta;
};

// delta-threshold at slope d' implies epsilon-threshold at margin
//   e' = min{ q/(1-q), 1/(2n+1) },  q = d'(1-theta)/theta,
//   theta = max{ 2n/(2n+1), 2d'/(2d'+1) }.
// Returns {epsilon_prime, theta}. Requires delta_prime > 0, n >= 1.
std::pair<Rational, Rational> epsilon_prime_from_delta_prime(const Rational& delta_prime, int n);

// epsilon-threshold at margin e' implies delta-threshold at slope
// d' = e' / (n + 1). Requires epsilon_prime > 0, n >= 1.
Rational delta_prime_from_epsilon_prime(const Rational& epsilon_prime, int n);

// Conversions between the unprimed (0,1) scale and the primed scale,
// packaged for the CLI. Input must lie in (0, 1).
ThresholdParams thresholds_from_delta(const Rational& delta, int n);
ThresholdParams thresholds_from_epsilon(const Rational& epsilon, int n);

}  // namespace kstab
