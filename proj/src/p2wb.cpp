#include "kstab/p2wb.hpp"

#include <numeric>
#include <stdexcept>

#include "kstab/toric.hpp"
#include "kstab/volfun.hpp"

namespace kstab {

PlaneDivisorCase::PlaneDivisorCase(int degree) : d(degree) {
    if (degree < 1) throw std::invalid_argument("PlaneDivisorCase: degree must be >= 1");
}

VolumeCurve plane_divisor_curve(const PlaneDivisorCase& c) {
    const Rational d{c.d};
    // (3 - dx)^2 = 9 - 6d x + d^2 x^2 on [0, 3/d].
    PiecewisePolynomial body({Rational{0}, 3 / d},
                             {Polynomial({Rational{9}, -6 * d, d * d})});
    return VolumeCurve(std::move(body), 2, Rational{9});
}

InvariantReport plane_divisor_report(const PlaneDivisorCase& c) {
    return make_report(2, Rational{9}, Rational{1}, plane_divisor_curve(c));
}

WeightedBlowupDescriptor::WeightedBlowupDescriptor(long long a_, long long b_,
                                                   std::optional<Rational> tau_)
    : a(a_), b(b_), tau(std::move(tau_)) {
    if (b < 1 || a < b) throw std::invalid_argument("WeightedBlowupDescriptor: need a >= b >= 1");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("WeightedBlowupDescriptor: weights must be coprime");
    if (tau) {
        if (*tau <= 0 || *tau > 3 * a || (*tau) * (*tau) < Rational(9 * a * b))
            throw std::invalid_argument(
                "WeightedBlowupDescriptor: tau outside the admissible window [3*sqrt(ab), 3a]");
    }
}

WeightedBlowupResult weighted_blowup_report(const WeightedBlowupDescriptor& desc) {
    if (!desc.tau) throw std::invalid_argument("weighted_blowup_report: tau is required");
    const Rational tau = *desc.tau;
    const Rational ab{desc.a * desc.b};
    const Rational epsilon = 9 * ab / tau;

    std::vector<Rational> breaks{Rational{0}};
    std::vector<Polynomial> pieces;
    const Polynomial first({Rational{9}, Rational{0}, -1 / ab});
    if (epsilon == tau) {
        // tau^2 == 9ab: the positive part stays big all the way down.
        breaks.push_back(tau);
        pieces.push_back(first);
    } else {
        const Rational c = 9 / (tau * (tau - epsilon));
        breaks.push_back(epsilon);
        breaks.push_back(tau);
        pieces.push_back(first);
        pieces.push_back(Polynomial({c * tau * tau, -2 * c * tau, c}));
    }
    VolumeCurve curve(PiecewisePolynomial(std::move(breaks), std::move(pieces)), 2, Rational{9});
    InvariantReport report = make_report(2, Rational{9}, desc.log_discrepancy(), curve);
    return {epsilon, std::move(curve), std::move(report)};
}

WindowSummary betahat_over_window(long long a, long long b, const Rational& bracket_width) {
    const WeightedBlowupDescriptor desc(a, b);  // validates (a, b)
    if (bracket_width <= 0)
        throw std::invalid_argument("betahat_over_window: bracket width must be positive");
    const Rational ab{a * b};
    const Rational denom{3 * (a + b)};
    const auto betahat_at = [&](const Rational& tau) { return 1 - (tau + 9 * ab / tau) / denom; };

    WindowSummary s;
    s.a = a;
    s.b = b;
    s.tau_at_min = Rational{3 * a};
    s.epsilon_at_min = Rational{3 * b};
    s.min_betahat = betahat_at(s.tau_at_min);  // tau + 9ab/tau increases on the window
    s.nonnegative = s.min_betahat >= 0;

    const auto [qlo, qhi] = sqrt_bracket(ab, bracket_width / 3);
    s.tau_lo_bracket = {3 * qlo, 3 * qhi};
    // betahat(3*sqrt(ab)) = 1 - 2*sqrt(ab)/(a+b), decreasing in sqrt(ab).
    s.betahat_at_lo_bracket = {1 - 2 * qhi / Rational(a + b), 1 - 2 * qlo / Rational(a + b)};
    return s;
}

std::vector<Rational> admissible_tau_samples(long long a, long long b, int count) {
    const WeightedBlowupDescriptor desc(a, b);
    if (count < 1) throw std::invalid_argument("admissible_tau_samples: count must be >= 1");
    const Rational ab{a * b};
    const Rational hi{3 * a};
    Rational lo;
    if (const auto root = exact_nth_root(ab, 2)) {
        lo = 3 * *root;
    } else {
        // A rational point strictly inside the window: the bracket's upper
        // end has square > ab, and sits well below a (the gap to a exceeds
        // any sensible width).
        const Rational width = std::min(Rational(1, 1000000), Rational(1, 12 * a));
        lo = 3 * sqrt_bracket(ab, width).second;
    }
    std::vector<Rational> taus;
    if (count == 1 || lo == hi) {
        taus.push_back(hi);
        return taus;
    }
    for (int k = 0; k < count; ++k)
        taus.push_back(lo + (hi - lo) * Rational(k, count - 1));
    return taus;
}

bool matches_toric_curve(long long a, long long b) {
    const WeightedBlowupDescriptor desc(a, b, Rational{3 * a});
    const WeightedBlowupResult wb = weighted_blowup_report(desc);

    // Plain P^2 as a toric pair.
    const FanPair p2({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}},
                     {Rational{0}, Rational{0}, Rational{0}});
    const ToricModel model = make_toric_model(p2);
    const LatticeVector v{a, b};
    const VolumeCurve slice = toric_volume_curve(model.polytope, v);

    if (!equivalent(wb.curve.body(), slice.body())) return false;
    if (toric_log_discrepancy(p2, v) != wb.report.A) return false;
    // beta along both toric routes (asserted equal inside toric_beta) and
    // from the weighted-blowup report must all vanish at tau = 3a.
    return toric_beta(model, v) == 0 && wb.report.beta == 0;
}

}  // namespace kstab
