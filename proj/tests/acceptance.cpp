// Acceptance gate: one self-contained binary, one [PASS]/[FAIL] line per
// criterion, exit 1 if anything fails. Criteria 1-5 are exact (tolerance 0,
// rational equality); criterion 6 requires zero property failures across at
// least 200 geometric curves; criterion 7 allows 10% relative error on the
// lattice-count approximation (checked exactly as 10*|err| <= exact).

#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kstab/dim1.hpp"
#include "kstab/invariants.hpp"
#include "kstab/p2wb.hpp"
#include "kstab/piecewise.hpp"
#include "kstab/toric.hpp"
#include "kstab/verify.hpp"

using kstab::CyclicCover;
using kstab::P1Pair;
using kstab::P1Point;
using kstab::P1Verdict;
using kstab::Rational;
using kstab::WeightedBlowupDescriptor;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
    if (!ok && !detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

// 1. Plane divisors of degree 1..5: betahat == (d-1)/d exactly.
void criterion1() {
    std::ostringstream detail;
    bool ok = true;
    for (int d = 1; d <= 5; ++d) {
        const auto r = kstab::plane_divisor_report(kstab::PlaneDivisorCase(d));
        if (r.betahat != Rational(d - 1, d) || r.A != 1 || r.tau != Rational(3, d)) {
            ok = false;
            detail << "d=" << d << " betahat=" << kstab::to_string(r.betahat) << " ";
        }
    }
    report(1, "plane divisors d=1..5 have betahat == (d-1)/d exactly", ok, detail.str());
}

// 2. Every coprime (a,b) with 1 <= b <= a <= 20, five admissible tau each:
//    epsilon*tau == 9ab, betahat == 1 - (eps+tau)/(3(a+b)), and the two
//    branches agree in value and first derivative at the knee — all exact.
void criterion2() {
    std::ostringstream detail;
    bool ok = true;
    int checked = 0;
    for (long long a = 1; a <= 20 && ok; ++a)
        for (long long b = 1; b <= a && ok; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (const Rational& tau : kstab::admissible_tau_samples(a, b, 5)) {
                const auto res =
                    kstab::weighted_blowup_report(WeightedBlowupDescriptor(a, b, tau));
                ++checked;
                const bool product_ok = res.epsilon * tau == Rational(9 * a * b);
                const bool betahat_ok =
                    res.report.betahat == 1 - (res.epsilon + tau) / Rational(3 * (a + b));
                bool knee_ok = true;
                const auto& body = res.curve.body();
                if (body.pieces().size() == 2) {
                    knee_ok =
                        body.pieces()[0](res.epsilon) == body.pieces()[1](res.epsilon) &&
                        body.pieces()[0].derivative()(res.epsilon) ==
                            body.pieces()[1].derivative()(res.epsilon);
                }
                // The slope at the knee is -18/tau in both regimes.
                knee_ok = knee_ok && body.pieces()[0].derivative()(res.epsilon) ==
                                         Rational(-18) / tau;
                if (!product_ok || !betahat_ok || !knee_ok) {
                    ok = false;
                    detail << "(a,b)=(" << a << "," << b << ") tau=" << kstab::to_string(tau);
                    break;
                }
            }
        }
    std::ostringstream what;
    what << "weighted blowups a<=20, 5 admissible tau each (" << checked
         << " reports): eps*tau == 9ab, betahat closed form, knee matches — exact";
    report(2, what.str(), ok, detail.str());
}

// 3. Window minimum of betahat is exactly 0, attained at tau = 3a, for every
//    coprime pair with a <= 50.
void criterion3() {
    std::ostringstream detail;
    bool ok = true;
    int windows = 0;
    for (long long a = 1; a <= 50 && ok; ++a)
        for (long long b = 1; b <= a && ok; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const auto w = kstab::betahat_over_window(a, b);
            ++windows;
            if (w.min_betahat != 0 || w.tau_at_min != Rational(3 * a) || !w.nonnegative) {
                ok = false;
                detail << "(a,b)=(" << a << "," << b << ") min="
                       << kstab::to_string(w.min_betahat) << " at "
                       << kstab::to_string(w.tau_at_min);
            }
        }
    std::ostringstream what;
    what << "betahat window minimum == 0 at tau == 3a for all coprime a <= 50 (" << windows
         << " windows) — exact";
    report(3, what.str(), ok, detail.str());
}

// 4. At tau = 3a the weighted-blowup curve is the toric slice curve of
//    v = (a,b) on the plane, and beta(v) == 0 along the barycenter route and
//    the integral route.
void criterion4() {
    std::ostringstream detail;
    bool ok = true;
    int pairs = 0;
    for (long long a = 1; a <= 10 && ok; ++a)
        for (long long b = 1; b <= a && ok; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ++pairs;
            if (!kstab::matches_toric_curve(a, b)) {
                ok = false;
                detail << "(a,b)=(" << a << "," << b << ")";
            }
        }
    std::ostringstream what;
    what << "toric slice == weighted-blowup curve at tau == 3a, beta == 0 both routes, "
         << "coprime a <= 10 (" << pairs << " pairs) — exact";
    report(4, what.str(), ok, detail.str());
}

// 5. The cyclic-cover example end to end.
void criterion5() {
    std::ostringstream detail;
    bool ok = true;
    const auto fail = [&](const std::string& msg) {
        ok = false;
        detail << msg << "; ";
    };

    const P1Pair down({{P1Point::finite(Rational(0)), Rational(1, 2)},
                       {P1Point::infinity(), Rational(1, 2)},
                       {P1Point::finite(Rational(1)), Rational(1, 2)}});
    const P1Verdict down_verdict = kstab::p1_verdict(down);
    if (down_verdict.kind != P1Verdict::Kind::UniformlyKStable)
        fail("downstairs verdict is not uniformly K-stable");
    if (down_verdict.epsilon_star != Rational(1, 2))
        fail("downstairs epsilon* = " + kstab::to_string(down_verdict.epsilon_star) +
             " != 1/2");

    const P1Pair up = kstab::cover_pullback(down, CyclicCover(2));
    const bool lift_ok =
        up.marked_points().size() == 2 &&
        up.marked_points()[0].at == P1Point::finite(Rational(1)) &&
        up.marked_points()[0].coefficient == Rational(1, 2) &&
        up.marked_points()[1].at == P1Point::finite(Rational(-1)) &&
        up.marked_points()[1].coefficient == Rational(1, 2);
    if (!lift_ok) fail("pullback is not exactly (1/2)[1] + (1/2)[-1]");

    const P1Verdict up_verdict = kstab::p1_verdict(up);
    if (up_verdict.kind != P1Verdict::Kind::KSemistableOnly)
        fail("upstairs verdict is not strictly K-semistable");
    if (up_verdict.epsilon_star != 0) fail("upstairs epsilon* != 0");
    if (!up_verdict.witness || !(up_verdict.witness->point() == P1Point::finite(Rational(1))))
        fail("upstairs witness is not [1]");
    if (up_verdict.reports.empty() || up_verdict.reports[0].second.betahat != 0)
        fail("betahat([1]) != 0 upstairs");

    report(5,
           "cyclic cover example: stable downstairs (eps* = 1/2), pullback = "
           "(1/2)[1] + (1/2)[-1], strictly semistable upstairs with witness [1] — exact",
           ok, detail.str());
}

// 6. The inequality battery over >= 200 geometric curves with zero failures.
void criterion6() {
    const auto suite = kstab::verify_inequalities(7, 60);
    std::ostringstream what;
    what << "property battery: " << suite.cases << " checks across " << suite.curves
         << " geometric curves (need >= 200), " << suite.failures.size() << " failures";
    std::ostringstream detail;
    for (std::size_t i = 0; i < suite.failures.size() && i < 3; ++i)
        detail << suite.failures[i] << "; ";
    report(6, what.str(), suite.pass() && suite.curves >= 200, detail.str());
}

// 7. Scaled lattice-point counts at k = 30 approximate the slice curve within
//    10% relative error for v = (1,0), (2,1) at x in {0, 1/2, 1}.
void criterion7() {
    const auto suite = kstab::verify_lattice_limit(30);
    std::ostringstream what;
    what << "lattice-count approximation at k = 30, " << suite.cases
         << " evaluations within 10% relative error";
    std::ostringstream detail;
    for (std::size_t i = 0; i < suite.failures.size() && i < 3; ++i)
        detail << suite.failures[i] << "; ";
    report(7, what.str(), suite.pass(), detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
