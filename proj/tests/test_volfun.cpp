#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kstab/piecewise.hpp"
#include "kstab/volfun.hpp"
#include "kstab/volume_curve.hpp"

using kstab::ConcavityTriple;
using kstab::PiecewisePolynomial;
using kstab::Polynomial;
using kstab::Rational;
using kstab::VolumeCurve;

namespace {

// (3 - x)^2 on [0, 3]: the plane-divisor d = 1 volume curve.
VolumeCurve squared_curve() {
    return VolumeCurve(
        PiecewisePolynomial({Rational(0), Rational(3)},
                            {Polynomial({Rational(9), Rational(-6), Rational(1)})}),
        2, Rational(9));
}

// deg L - x on [0, deg L]: the universal dimension-one curve.
VolumeCurve linear_curve(const Rational& degree) {
    return VolumeCurve(
        PiecewisePolynomial({Rational(0), degree}, {Polynomial({degree, Rational(-1)})}), 1,
        degree);
}

// Two-piece quadratic with a knee: the (2,1)-weighted-blowup curve at tau = 6,
//   9 - x^2/2 on [0, 3],  (6 - x)^2/2 on [3, 6].
VolumeCurve kneed_curve() {
    return VolumeCurve(
        PiecewisePolynomial({Rational(0), Rational(3), Rational(6)},
                            {Polynomial({Rational(9), Rational(0), Rational(-1, 2)}),
                             Polynomial({Rational(18), Rational(-6), Rational(1, 2)})}),
        2, Rational(9));
}

}  // namespace

TEST_CASE("piecewise construction enforces shape, monotone breaks and continuity") {
    const Polynomial one = Polynomial::constant(Rational(1));
    CHECK_THROWS_AS(PiecewisePolynomial({Rational(0)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePolynomial({Rational(0), Rational(0)}, {one}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PiecewisePolynomial({Rational(1), Rational(0)}, {one}),
                    std::invalid_argument);
    // Discontinuity at the interior breakpoint 1: 1 vs 2.
    CHECK_THROWS_AS(PiecewisePolynomial({Rational(0), Rational(1), Rational(2)},
                                        {one, Polynomial::constant(Rational(2))}),
                    std::invalid_argument);
}

TEST_CASE("piecewise evaluation picks the right piece and rejects out-of-domain x") {
    const PiecewisePolynomial f({Rational(0), Rational(1), Rational(2)},
                                {Polynomial({Rational(0), Rational(1)}),       // x
                                 Polynomial({Rational(2), Rational(-1)})});    // 2 - x
    CHECK(f(Rational(1, 2)) == Rational(1, 2));
    CHECK(f(Rational(3, 2)) == Rational(1, 2));
    CHECK(f(Rational(1)) == Rational(1));  // knee, both pieces agree
    CHECK(f(Rational(0)) == Rational(0));
    CHECK(f(Rational(2)) == Rational(0));
    CHECK(f.piece_index(Rational(1, 2)) == 0);
    CHECK(f.piece_index(Rational(3, 2)) == 1);
    CHECK_THROWS_AS(f(Rational(-1, 10)), std::domain_error);
    CHECK_THROWS_AS(f(Rational(21, 10)), std::domain_error);
}

TEST_CASE("integrate: frozen exact values") {
    // integral of 1 over [0, 2] = 2
    const PiecewisePolynomial c({Rational(0), Rational(2)}, {Polynomial::constant(Rational(1))});
    CHECK(kstab::integrate(c, Rational(0), Rational(2)) == Rational(2));
    // integral of (3 - x)^2 over [0, 3] = 9
    CHECK(kstab::integrate(squared_curve().body(), Rational(0), Rational(3)) == Rational(9));
    // integral of (1 - x) over [0, 1] = 1/2
    const PiecewisePolynomial lin({Rational(0), Rational(1)},
                                  {Polynomial({Rational(1), Rational(-1)})});
    CHECK(kstab::integrate(lin, Rational(0), Rational(1)) == Rational(1, 2));
    // Sub-intervals crossing a knee.
    CHECK(kstab::integrate(kneed_curve().body(), Rational(2), Rational(4)) ==
          kstab::integrate(kneed_curve().body(), Rational(2), Rational(3)) +
              kstab::integrate(kneed_curve().body(), Rational(3), Rational(4)));
    CHECK_THROWS_AS(kstab::integrate(lin, Rational(1, 2), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(kstab::integrate(lin, Rational(0), Rational(2)), std::domain_error);
}

TEST_CASE("equivalent compares functions, not representations") {
    // x on [0,2] written in one piece vs split at 1.
    const PiecewisePolynomial whole({Rational(0), Rational(2)},
                                    {Polynomial({Rational(0), Rational(1)})});
    const PiecewisePolynomial split({Rational(0), Rational(1), Rational(2)},
                                    {Polynomial({Rational(0), Rational(1)}),
                                     Polynomial({Rational(0), Rational(1)})});
    CHECK(kstab::equivalent(whole, split));
    CHECK(kstab::equivalent(split, whole));

    const PiecewisePolynomial bent({Rational(0), Rational(1), Rational(2)},
                                   {Polynomial({Rational(0), Rational(1)}),
                                    Polynomial({Rational(1)})});  // flattens after 1
    CHECK(!kstab::equivalent(whole, bent));

    const PiecewisePolynomial shifted({Rational(0), Rational(3)},
                                      {Polynomial({Rational(0), Rational(1)})});
    CHECK(!kstab::equivalent(whole, shifted));  // different domains
}

TEST_CASE("VolumeCurve validates the geometric shape") {
    CHECK(squared_curve().tau() == Rational(3));
    CHECK(squared_curve().total_volume() == Rational(9));
    CHECK(squared_curve()(Rational(1)) == Rational(4));
    // value_or_zero extends past tau but rejects negative x.
    CHECK(squared_curve().value_or_zero(Rational(5)) == Rational(0));
    CHECK(squared_curve().value_or_zero(Rational(3)) == Rational(0));
    CHECK_THROWS_AS(squared_curve().value_or_zero(Rational(-1)), std::domain_error);

    const Polynomial lin{{Rational(1), Rational(-1)}};
    const PiecewisePolynomial ok({Rational(0), Rational(1)}, {lin});
    CHECK_THROWS_AS(VolumeCurve(ok, 0, Rational(1)), std::invalid_argument);   // dimension
    CHECK_THROWS_AS(VolumeCurve(ok, 1, Rational(2)), std::invalid_argument);   // vol(0) mismatch
    CHECK_THROWS_AS(VolumeCurve(ok, 1, Rational(-1)), std::invalid_argument);  // total <= 0

    // vol(tau) != 0
    const PiecewisePolynomial positive_at_end({Rational(0), Rational(1)},
                                              {Polynomial::constant(Rational(1))});
    CHECK_THROWS_AS(VolumeCurve(positive_at_end, 1, Rational(1)), std::invalid_argument);

    // domain must start at 0
    const PiecewisePolynomial off({Rational(1), Rational(2)},
                                  {Polynomial({Rational(2), Rational(-1)})});
    CHECK_THROWS_AS(VolumeCurve(off, 1, Rational(1)), std::invalid_argument);

    // piece degree above the dimension
    CHECK_THROWS_AS(VolumeCurve(PiecewisePolynomial({Rational(0), Rational(1)},
                                                    {Polynomial({Rational(1), Rational(0),
                                                                 Rational(-1)})}),
                                1, Rational(1)),
                    std::invalid_argument);

    // vol = (1 - x)(1 + 2x) = 1 + x - 2x^2 increases near 0.
    CHECK_THROWS_AS(VolumeCurve(PiecewisePolynomial({Rational(0), Rational(1)},
                                                    {Polynomial({Rational(1), Rational(1),
                                                                 Rational(-2)})}),
                                2, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("expected vanishing order: frozen values") {
    CHECK(kstab::expected_vanishing(squared_curve()) == Rational(1));       // 9/9 = 1
    CHECK(kstab::expected_vanishing(linear_curve(Rational(2))) == Rational(1));
    CHECK(kstab::expected_vanishing(linear_curve(Rational(1, 2))) == Rational(1, 4));
    CHECK(kstab::expected_vanishing(kneed_curve()) == Rational(3));         // (6 + 3)/3
}

TEST_CASE("tau upper bound S <= (n/(n+1)) tau holds on geometric curves") {
    CHECK(kstab::check_tau_upper(squared_curve()));
    CHECK(kstab::check_tau_upper(linear_curve(Rational(3, 2))));
    CHECK(kstab::check_tau_upper(kneed_curve()));
}

TEST_CASE("tau upper bound detects a synthetic violator") {
    // Constant 2 on [0, 3/2], then 4(2 - x): a valid non-increasing curve with
    // S = 7/4 > tau/2 = 1 — no genuine one-dimensional volume looks like this.
    const VolumeCurve fake(
        PiecewisePolynomial({Rational(0), Rational(3, 2), Rational(2)},
                            {Polynomial::constant(Rational(2)),
                             Polynomial({Rational(8), Rational(-4)})}),
        1, Rational(2));
    CHECK(kstab::expected_vanishing(fake) == Rational(7, 4));
    CHECK(!kstab::check_tau_upper(fake));
}

TEST_CASE("Fujita-type lower bound vol(x) >= (1 - x/tau)^n L^n") {
    std::vector<Rational> samples;
    for (int i = 0; i <= 10; ++i) samples.push_back(Rational(3 * i, 10));
    CHECK(kstab::check_fujita_lower(squared_curve(), samples));

    samples.clear();
    for (int i = 0; i <= 6; ++i) samples.push_back(Rational(i));
    CHECK(kstab::check_fujita_lower(kneed_curve(), samples));

    // A curve dipping below the bound must fail: with n = 2, tau = 1, L^2 = 1
    // the bound at 1/2 is 1/4, and this two-piece curve sits at 1/8 there.
    const VolumeCurve steep(
        PiecewisePolynomial({Rational(0), Rational(1, 2), Rational(1)},
                            {Polynomial({Rational(1), Rational(-7, 4)}),
                             Polynomial({Rational(1, 4), Rational(-1, 4)})}),
        2, Rational(1));
    const std::vector<Rational> mid{Rational(1, 2)};
    CHECK(!kstab::check_fujita_lower(steep, mid));

    CHECK_THROWS_AS(kstab::check_fujita_lower(squared_curve(), std::vector<Rational>{Rational(4)}),
                    std::domain_error);
}

TEST_CASE("nth_root_superadditive agrees with floating point on a grid") {
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a <= 12; ++a)
            for (int b = 0; b <= 6; ++b)
                for (int c = 0; c <= 6; ++c) {
                    const bool exact = kstab::nth_root_superadditive(n, Rational(a, 2),
                                                                     Rational(b, 3), Rational(c, 5));
                    const double lhs = std::pow(a / 2.0, 1.0 / n);
                    const double rhs = std::pow(b / 3.0, 1.0 / n) + std::pow(c / 5.0, 1.0 / n);
                    // Stay away from floating-point ties.
                    if (std::abs(lhs - rhs) > 1e-9) CHECK(exact == (lhs > rhs));
                }
}

TEST_CASE("nth_root_superadditive edge cases") {
    CHECK(kstab::nth_root_superadditive(3, Rational(8), Rational(1), Rational(1)));   // 2 >= 2
    CHECK(!kstab::nth_root_superadditive(3, Rational(8), Rational(1), Rational(2)));
    CHECK(kstab::nth_root_superadditive(2, Rational(4), Rational(1), Rational(1)));   // 2 >= 2
    CHECK(!kstab::nth_root_superadditive(2, Rational(4), Rational(1), Rational(9, 8)));
    CHECK(kstab::nth_root_superadditive(1, Rational(5), Rational(2), Rational(3)));
    CHECK(kstab::nth_root_superadditive(2, Rational(1, 2), Rational(0), Rational(1, 2)));
    CHECK(kstab::nth_root_superadditive(3, Rational(0), Rational(0), Rational(0)));
    CHECK_THROWS_AS(kstab::nth_root_superadditive(4, Rational(1), Rational(0), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(kstab::nth_root_superadditive(2, Rational(-1), Rational(0), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("log-concavity of vol^(1/n) holds on geometric curves") {
    const std::vector<ConcavityTriple> triples{
        {Rational(0), Rational(3), Rational(1, 3)},
        {Rational(0), Rational(3), Rational(1, 2)},
        {Rational(1), Rational(2), Rational(2, 5)},
    };
    CHECK(kstab::check_log_concavity(squared_curve(), triples));

    const std::vector<ConcavityTriple> knee_triples{
        {Rational(0), Rational(6), Rational(1, 2)},
        {Rational(1), Rational(5), Rational(1, 3)},
        {Rational(3), Rational(6), Rational(1, 2)},
    };
    CHECK(kstab::check_log_concavity(kneed_curve(), knee_triples));
}

TEST_CASE("log-concavity detects a convex kink") {
    // sqrt(vol) has slopes -2 then -1 across the knee at 1/4: convex there.
    const VolumeCurve kinked(
        PiecewisePolynomial({Rational(0), Rational(1, 4), Rational(3, 4)},
                            {Polynomial({Rational(1), Rational(-4), Rational(4)}),
                             Polynomial({Rational(9, 16), Rational(-3, 2), Rational(1)})}),
        2, Rational(1));
    const std::vector<ConcavityTriple> probe{{Rational(0), Rational(3, 4), Rational(2, 3)}};
    CHECK(!kstab::check_log_concavity(kinked, probe));
}

TEST_CASE("log-concavity argument validation") {
    const std::vector<ConcavityTriple> bad_x{{Rational(-1), Rational(1), Rational(1, 2)}};
    CHECK_THROWS_AS(kstab::check_log_concavity(squared_curve(), bad_x), std::domain_error);
    const std::vector<ConcavityTriple> bad_lambda{{Rational(0), Rational(1), Rational(2)}};
    CHECK_THROWS_AS(kstab::check_log_concavity(squared_curve(), bad_lambda), std::domain_error);
}
