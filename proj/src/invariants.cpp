#include "kstab/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "kstab/volfun.hpp"

namespace kstab {

InvariantReport make_report(int n, const Rational& Ln, const Rational& A,
                            const VolumeCurve& curve) {
    if (A <= 0) throw std::invalid_argument("make_report: log discrepancy must be positive");
    if (curve.dimension() != n) throw std::invalid_argument("make_report: dimension mismatch");
    if (curve.total_volume() != Ln) throw std::invalid_argument("make_report: volume mismatch");
    InvariantReport r;
    r.n = n;
    r.Ln = Ln;
    r.A = A;
    r.tau = curve.tau();
    r.S = expected_vanishing(curve);
    r.beta = A * Ln - r.S * Ln;
    r.betahat = 1 - r.S / A;
    r.j = (r.tau - r.S) * Ln;
    // S < tau for any valid curve (vol < L^n on a set of positive measure),
    // so j > 0; a violation here means the curve invariants were broken.
    if (r.j <= 0) throw std::logic_error("make_report: j <= 0");
    return r;
}

bool delta_threshold_holds(const InvariantReport& r, const Rational& delta_prime) {
    if (delta_prime < 0) throw std::invalid_argument("delta_threshold_holds: negative slope");
    return (1 + delta_prime) * r.A - delta_prime * r.tau >= r.S;
}

bool epsilon_threshold_holds(const InvariantReport& r, const Rational& epsilon_prime) {
    if (epsilon_prime < 0) throw std::invalid_argument("epsilon_threshold_holds: negative margin");
    return r.A >= (1 + epsilon_prime) * r.S;
}

Rational quick_positive_bound(const InvariantReport& r) {
    if (r.tau > r.A) throw std::domain_error("quick_positive_bound: requires tau <= A");
    return Rational(1, r.n + 1);
}

std::pair<Rational, Rational> epsilon_prime_from_delta_prime(const Rational& delta_prime, int n) {
    if (delta_prime <= 0 || n < 1)
        throw std::invalid_argument("epsilon_prime_from_delta_prime: need delta' > 0, n >= 1");
    const Rational steep = 2 * delta_prime / (2 * delta_prime + 1);
    const Rational theta = std::max(Rational(2 * n, 2 * n + 1), steep);
    const Rational q = delta_prime * (1 - theta) / theta;  // q <= 1/2 by choice of theta
    const Rational ratio = q / (1 - q);
    const Rational eps = std::min(ratio, Rational(1, 2 * n + 1));
    return {eps, theta};
}

Rational delta_prime_from_epsilon_prime(const Rational& epsilon_prime, int n) {
    if (epsilon_prime <= 0 || n < 1)
        throw std::invalid_argument("delta_prime_from_epsilon_prime: need epsilon' > 0, n >= 1");
    return epsilon_prime / (n + 1);
}

namespace {

Rational primed(const Rational& x) { return x / (1 - x); }
Rational unprimed(const Rational& x_prime) { return x_prime / (1 + x_prime); }

}  // namespace

ThresholdParams thresholds_from_delta(const Rational& delta, int n) {
    if (delta <= 0 || delta >= 1)
        throw std::invalid_argument("thresholds_from_delta: delta must lie in (0, 1)");
    ThresholdParams p;
    p.n = n;
    p.delta = delta;
    p.delta_prime = primed(delta);
    auto [eps_prime, theta] = epsilon_prime_from_delta_prime(p.delta_prime, n);
    p.epsilon_prime = eps_prime;
    p.epsilon = unprimed(eps_prime);
    p.theta = theta;
    return p;
}

ThresholdParams thresholds_from_epsilon(const Rational& epsilon, int n) {
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("thresholds_from_epsilon: epsilon must lie in (0, 1)");
    ThresholdParams p;
    p.n = n;
    p.epsilon = epsilon;
    p.epsilon_prime = primed(epsilon);
    p.delta_prime = delta_prime_from_epsilon_prime(p.epsilon_prime, n);
    p.delta = unprimed(p.delta_prime);
    return p;
}

}  // namespace kstab
