#include "kstab/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "kstab/dim1.hpp"
#include "kstab/invariants.hpp"
#include "kstab/p2wb.hpp"
#include "kstab/toric.hpp"
#include "kstab/volfun.hpp"

namespace kstab {

namespace {

void run_battery(SuiteResult& result, const VolumeCurve& curve, const InvariantReport& r,
                 const std::string& context) {
    const auto flag = [&](const std::string& what) {
        result.failures.push_back(context + ": " + what);
    };
    ++result.curves;

    // tau upper bound S <= (n/(n+1)) tau.
    ++result.cases;
    if (!check_tau_upper(curve)) flag("tau upper bound failed");

    // Fujita-type lower bound at 10 samples.
    std::vector<Rational> samples;
    for (int i = 0; i < 10; ++i) samples.push_back(curve.tau() * Rational(i, 10));
    ++result.cases;
    if (!check_fujita_lower(curve, samples)) flag("volume lower bound failed");

    // Quick positive bound: tau <= A forces betahat >= 1/(n+1).
    if (r.tau <= r.A) {
        ++result.cases;
        if (r.betahat < quick_positive_bound(r)) flag("quick positive bound failed");
    }

    // j identity.
    ++result.cases;
    if (r.j != (r.tau - r.A) * r.Ln + r.beta) flag("j identity failed");

    // Threshold implications, both directions, on a small grid plus the
    // data-derived tight points.
    std::vector<Rational> grid{Rational(1, 10), Rational(1, 2), Rational(1), Rational(3)};
    if (r.betahat > 0) grid.push_back(r.betahat / (1 - r.betahat));  // makes A >= (1+e')S tight
    if (r.A != r.tau) {
        const Rational tight = (r.S - r.A) / (r.A - r.tau);
        if (tight > 0) grid.push_back(tight);  // makes the delta inequality tight
    }
    for (const Rational& p : grid) {
        ++result.cases;
        if (epsilon_threshold_holds(r, p) &&
            !delta_threshold_holds(r, delta_prime_from_epsilon_prime(p, r.n)))
            flag("epsilon->delta implication failed at " + to_string(p));
        ++result.cases;
        if (delta_threshold_holds(r, p) &&
            !epsilon_threshold_holds(r, epsilon_prime_from_delta_prime(p, r.n).first))
            flag("delta->epsilon implication failed at " + to_string(p));
    }

    // Log-concavity of vol^(1/n) at a few triples.
    const std::vector<ConcavityTriple> triples{
        {Rational{0}, curve.tau(), Rational(1, 3)},
        {Rational{0}, curve.tau(), Rational(1, 2)},
        {curve.tau() / 4, 3 * curve.tau() / 4, Rational(1, 2)},
    };
    ++result.cases;
    if (!check_log_concavity(curve, triples)) flag("log-concavity failed");
}

P1Pair random_p1_pair(std::mt19937_64& rng) {
    static const std::vector<P1Point> pool = [] {
        std::vector<P1Point> pts{P1Point::infinity()};
        for (const auto& [num, den] : std::vector<std::pair<int, int>>{{0, 1},
                                                                       {1, 1},
                                                                       {-1, 1},
                                                                       {2, 1},
                                                                       {-2, 1},
                                                                       {1, 2},
                                                                       {-1, 2},
                                                                       {3, 1},
                                                                       {-3, 1},
                                                                       {5, 2},
                                                                       {7, 3},
                                                                       {-7, 2},
                                                                       {4, 1},
                                                                       {-4, 1},
                                                                       {9, 1},
                                                                       {-9, 2},
                                                                       {1, 3}})
            pts.push_back(P1Point::finite(Rational(num, den)));
        return pts;
    }();

    const int count = 1 + static_cast<int>(rng() % 4);
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<MarkedPoint> points;
    Rational sum{0};
    for (int i = 0; i < count; ++i) {
        const int den = 2 + static_cast<int>(rng() % 8);
        const int num = 1 + static_cast<int>(rng() % static_cast<unsigned>(den - 1));
        points.push_back({pool[order[static_cast<std::size_t>(i)]], Rational(num, den)});
        sum += points.back().coefficient;
    }
    if (sum >= 2)  // at most 4 coefficients below 1, so halving always lands under 2
        for (auto& mp : points) mp.coefficient /= 2;
    return P1Pair(std::move(points));
}

void sweep_fixture(SuiteResult& result, const std::string& label, const FanPair& fan, int radius) {
    const ToricModel model = make_toric_model(fan);
    for (const auto& v : primitive_vectors(model.n, radius)) {
        const VolumeCurve curve = toric_volume_curve(model.polytope, v);
        const InvariantReport r =
            make_report(model.n, model.Ln, toric_log_discrepancy(model.fan, v), curve);
        std::ostringstream ctx;
        ctx << label << " v=(";
        for (std::size_t i = 0; i < v.size(); ++i) ctx << (i ? "," : "") << v[i];
        ctx << ")";
        run_battery(result, curve, r, ctx.str());
    }
}

}  // namespace

SuiteResult verify_inequalities(std::uint64_t seed, int p1_samples) {
    if (p1_samples < 1) throw std::invalid_argument("verify_inequalities: need p1_samples >= 1");
    SuiteResult result;
    result.name = "inequalities";
    std::mt19937_64 rng(seed);

    for (int i = 0; i < p1_samples; ++i) {
        const P1Pair pair = random_p1_pair(rng);
        const P1Verdict verdict = p1_verdict(pair);
        for (const auto& [v, r] : verdict.reports) {
            std::ostringstream ctx;
            ctx << "p1 sample " << i << " at " << v.str();
            run_battery(result, p1_volume_curve(pair, v), r, ctx.str());
        }
    }

    const FanPair p2({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}},
                     {Rational{0}, Rational{0}, Rational{0}});
    const FanPair p2_boundary({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}},
                              {Rational(1, 3), Rational{0}, Rational(1, 5)});
    const FanPair p1xp1({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}},
                        {Rational{0}, Rational{0}, Rational{0}, Rational{0}});
    const FanPair p1xp1_boundary({{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                                 {{0, 2}, {2, 1}, {1, 3}, {3, 0}},
                                 {Rational(1, 2), Rational{0}, Rational{0}, Rational{0}});
    const FanPair p3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                     {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
                     {Rational{0}, Rational{0}, Rational{0}, Rational{0}});

    sweep_fixture(result, "P2", p2, 3);
    sweep_fixture(result, "P2+boundary", p2_boundary, 2);
    sweep_fixture(result, "P1xP1", p1xp1, 2);
    sweep_fixture(result, "P1xP1+boundary", p1xp1_boundary, 2);
    sweep_fixture(result, "P3", p3, 1);

    return result;
}

SuiteResult verify_toric_vs_p2wb(long long max_a) {
    if (max_a < 1) throw std::invalid_argument("verify_toric_vs_p2wb: need max_a >= 1");
    SuiteResult result;
    result.name = "toric-vs-p2wb";
    for (long long a = 1; a <= max_a; ++a)
        for (long long b = 1; b <= a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ++result.cases;
            ++result.curves;
            if (!matches_toric_curve(a, b)) {
                std::ostringstream msg;
                msg << "weighted blowup (" << a << "," << b << ") disagrees with toric slice";
                result.failures.push_back(msg.str());
            }
        }
    return result;
}

SuiteResult verify_lattice_limit(long long k) {
    if (k < 1) throw std::invalid_argument("verify_lattice_limit: need k >= 1");
    SuiteResult result;
    result.name = "lattice-limit";
    const FanPair p2({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}},
                     {Rational{0}, Rational{0}, Rational{0}});
    const Polytope P = moment_polytope(p2);
    const Rational kn = pow_int(Rational(k), 2);
    for (const LatticeVector v : {LatticeVector{1, 0}, LatticeVector{2, 1}}) {
        const VolumeCurve curve = toric_volume_curve(P, v);
        for (const Rational& x : {Rational{0}, Rational(1, 2), Rational{1}}) {
            ++result.cases;
            const long long count = lattice_section_count(P, v, k, x);
            const Rational approx = 2 * Rational(count) / kn;  // n! = 2
            const Rational exact = curve(x);
            const Rational err = approx > exact ? approx - exact : exact - approx;
            if (10 * err > exact) {
                std::ostringstream msg;
                msg << "lattice count off by >10% for v=(" << v[0] << "," << v[1]
                    << ") at x=" << to_string(x) << " (approx " << to_string(approx) << " vs "
                    << to_string(exact) << ")";
                result.failures.push_back(msg.str());
            }
        }
        ++result.curves;
    }
    return result;
}

}  // namespace kstab
