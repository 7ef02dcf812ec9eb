#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kstab/invariants.hpp"
#include "kstab/rational.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab {

// A closed point of P^1: a rational coordinate, the point at infinity, or a
// formal m-th root label. Labels exist so that pullbacks along t -> t^m stay
// total: the preimages of a rational point are irrational unless the point is
// an m-th power, in which case nth_root collapses them back to rationals.
// A label denotes radicand^(1/degree) * zeta^index (zeta a primitive
// degree-th root of unity) and is irrational by construction, hence never
// equal to a finite rational point; labels compare by their three fields and
// are only meaningful within the pair whose pullback created them.
class P1Point {
  public:
    static P1Point finite(Rational coordinate);
    static P1Point infinity();
    static P1Point nth_root(const Rational& radicand, int degree, int index);

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_root_label() const { return kind_ == Kind::RootLabel; }
    const Rational& coordinate() const;  // finite points only

    // "3/2", "inf", or "5^(1/3)#2" for labels.
    std::string str() const;

    friend bool operator==(const P1Point& a, const P1Point& b);
    friend bool operator<(const P1Point& a, const P1Point& b);

  private:
    enum class Kind { Finite, Infinity, RootLabel };
    Kind kind_ = Kind::Finite;
    Rational coord_;    // finite
    Rational radicand_; // label
    int degree_ = 0;    // label
    int index_ = 0;     // label, in [1, degree-1]
};

struct MarkedPoint {
    P1Point at;
    Rational coefficient;
};

// (P^1, sum c_i [p_i]) with 0 < c_i < 1, distinct points, sum c_i < 2 — the
// log Fano condition in dimension one; deg L = 2 - sum c_i > 0.
class P1Pair {
  public:
    explicit P1Pair(std::vector<MarkedPoint> points);

    const std::vector<MarkedPoint>& marked_points() const { return points_; }
    Rational coefficient_sum() const;
    Rational degree() const { return 2 - coefficient_sum(); }
    // 0 for unmarked points.
    Rational coefficient_at(const P1Point& p) const;

  private:
    std::vector<MarkedPoint> points_;
};

// ord_p for a closed point p, or ord at a general (unmarked) point.
class P1Valuation {
  public:
    static P1Valuation generic();
    static P1Valuation at(P1Point p);

    bool is_generic() const { return !point_.has_value(); }
    const P1Point& point() const;
    std::string str() const;

  private:
    std::optional<P1Point> point_;
};

// The degree-m cyclic cover t -> t^m of P^1, totally ramified over 0 and
// infinity.
struct CyclicCover {
    int degree = 2;
    explicit CyclicCover(int m);
};

Rational p1_log_discrepancy(const P1Pair& pair, const P1Valuation& v);

// vol(L - x ord_p) = deg L - x on [0, deg L], for every point p.
VolumeCurve p1_volume_curve(const P1Pair& pair, const P1Valuation& v);

struct P1Verdict {
    enum class Kind { UniformlyKStable, KSemistableOnly, Unstable };
    Kind kind = Kind::UniformlyKStable;
    // min of betahat over all point valuations (marked and generic).
    Rational epsilon_star;
    // A minimizing valuation, set when epsilon_star <= 0 (first in report
    // order among the minimizers).
    std::optional<P1Valuation> witness;
    // Marked points in pair order, then the generic valuation.
    std::vector<std::pair<P1Valuation, InvariantReport>> reports;
};

P1Verdict p1_verdict(const P1Pair& pair);

// Crepant pullback of the pair along the cover: coefficients over 0 and
// infinity become m*c - (m-1) (dropped when zero; negative values mean the
// cover is not admissible and throw std::domain_error), every other marked
// point lifts to its m preimages with the same coefficient. Marked points
// must be rational or infinity.
P1Pair cover_pullback(const P1Pair& pair, const CyclicCover& cover);

// vol_{X'}(pullback of L - x*v) == m * vol_X(L - x*v), both sides read off
// the two pairs' volume curves. Requires 0 <= x <= deg L.
bool check_cover_volume(const P1Pair& pair, const CyclicCover& cover, const P1Valuation& v,
                        const Rational& x);

// epsilon* does not increase under the pullback.
bool check_cover_monotonicity(const P1Pair& pair, const CyclicCover& cover);

}  // namespace kstab
