#include "kstab/dim1.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace kstab {

P1Point P1Point::finite(Rational coordinate) {
    P1Point p;
    p.kind_ = Kind::Finite;
    p.coord_ = std::move(coordinate);
    return p;
}

P1Point P1Point::infinity() {
    P1Point p;
    p.kind_ = Kind::Infinity;
    return p;
}

P1Point P1Point::nth_root(const Rational& radicand, int degree, int index) {
    if (degree < 2) throw std::invalid_argument("P1Point::nth_root: degree must be >= 2");
    index %= degree;
    if (index < 0) index += degree;
    if (radicand == 0) return finite(Rational{0});
    if (const auto root = exact_nth_root(radicand, static_cast<unsigned>(degree))) {
        if (index == 0) return finite(*root);
        if (degree % 2 == 0 && index == degree / 2) return finite(-*root);
    }
    P1Point p;
    p.kind_ = Kind::RootLabel;
    p.radicand_ = radicand;
    p.degree_ = degree;
    p.index_ = index;
    return p;
}

const Rational& P1Point::coordinate() const {
    if (kind_ != Kind::Finite) throw std::logic_error("P1Point: not a finite rational point");
    return coord_;
}

std::string P1Point::str() const {
    switch (kind_) {
        case Kind::Finite:
            return to_string(coord_);
        case Kind::Infinity:
            return "inf";
        case Kind::RootLabel: {
            std::ostringstream out;
            out << to_string(radicand_) << "^(1/" << degree_ << ")#" << index_;
            return out.str();
        }
    }
    return {};
}

bool operator==(const P1Point& a, const P1Point& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case P1Point::Kind::Finite:
            return a.coord_ == b.coord_;
        case P1Point::Kind::Infinity:
            return true;
        case P1Point::Kind::RootLabel:
            return a.radicand_ == b.radicand_ && a.degree_ == b.degree_ && a.index_ == b.index_;
    }
    return false;
}

bool operator<(const P1Point& a, const P1Point& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    switch (a.kind_) {
        case P1Point::Kind::Finite:
            return a.coord_ < b.coord_;
        case P1Point::Kind::Infinity:
            return false;
        case P1Point::Kind::RootLabel:
            return std::tie(a.radicand_, a.degree_, a.index_) <
                   std::tie(b.radicand_, b.degree_, b.index_);
    }
    return false;
}

P1Pair::P1Pair(std::vector<MarkedPoint> points) : points_(std::move(points)) {
    Rational sum{0};
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& mp = points_[i];
        if (mp.coefficient <= 0 || mp.coefficient >= 1)
            throw std::invalid_argument("P1Pair: coefficients must lie in (0, 1)");
        for (std::size_t j = 0; j < i; ++j)
            if (points_[j].at == mp.at)
                throw std::invalid_argument("P1Pair: marked points must be distinct");
        sum += mp.coefficient;
    }
    if (sum >= 2) throw std::invalid_argument("P1Pair: coefficient sum must be < 2 (log Fano)");
}

Rational P1Pair::coefficient_sum() const {
    Rational sum{0};
    for (const auto& mp : points_) sum += mp.coefficient;
    return sum;
}

Rational P1Pair::coefficient_at(const P1Point& p) const {
    for (const auto& mp : points_)
        if (mp.at == p) return mp.coefficient;
    return Rational{0};
}

P1Valuation P1Valuation::generic() { return P1Valuation{}; }

P1Valuation P1Valuation::at(P1Point p) {
    P1Valuation v;
    v.point_ = std::move(p);
    return v;
}

const P1Point& P1Valuation::point() const {
    if (!point_) throw std::logic_error("P1Valuation: generic valuation has no point");
    return *point_;
}

std::string P1Valuation::str() const { return point_ ? point_->str() : "generic"; }

CyclicCover::CyclicCover(int m) : degree(m) {
    if (m < 2) throw std::invalid_argument("CyclicCover: degree must be >= 2");
}

Rational p1_log_discrepancy(const P1Pair& pair, const P1Valuation& v) {
    if (v.is_generic()) return Rational{1};
    return 1 - pair.coefficient_at(v.point());
}

VolumeCurve p1_volume_curve(const P1Pair& pair, const P1Valuation&) {
    const Rational d = pair.degree();
    // ord_p of a point has vol(L - x ord_p) = deg L - x regardless of p.
    PiecewisePolynomial body({Rational{0}, d}, {Polynomial({d, Rational{-1}})});
    return VolumeCurve(std::move(body), 1, d);
}

P1Verdict p1_verdict(const P1Pair& pair) {
    const Rational Ln = pair.degree();
    P1Verdict verdict;
    auto add = [&](const P1Valuation& v) {
        const VolumeCurve curve = p1_volume_curve(pair, v);
        verdict.reports.emplace_back(v, make_report(1, Ln, p1_log_discrepancy(pair, v), curve));
    };
    for (const auto& mp : pair.marked_points()) add(P1Valuation::at(mp.at));
    add(P1Valuation::generic());

    verdict.epsilon_star = verdict.reports.front().second.betahat;
    for (const auto& [v, r] : verdict.reports)
        verdict.epsilon_star = std::min(verdict.epsilon_star, r.betahat);

    if (verdict.epsilon_star > 0) {
        verdict.kind = P1Verdict::Kind::UniformlyKStable;
    } else {
        verdict.kind = verdict.epsilon_star == 0 ? P1Verdict::Kind::KSemistableOnly
                                                 : P1Verdict::Kind::Unstable;
        for (const auto& [v, r] : verdict.reports)
            if (r.betahat == verdict.epsilon_star) {
                verdict.witness = v;
                break;
            }
    }
    return verdict;
}

P1Pair cover_pullback(const P1Pair& pair, const CyclicCover& cover) {
    const int m = cover.degree;
    const P1Point zero = P1Point::finite(Rational{0});
    const P1Point inf = P1Point::infinity();

    std::vector<MarkedPoint> lifted;
    for (const P1Point& ramified : {zero, inf}) {
        // Total ramification of index m over 0 and infinity: the crepant
        // coefficient upstairs is m*c - (m-1).
        const Rational c = m * pair.coefficient_at(ramified) - (m - 1);
        if (c < 0)
            throw std::domain_error(
                "cover_pullback: coefficient at " + ramified.str() +
                " is below (m-1)/m, the cover is not crepant-admissible");
        if (c > 0) lifted.push_back({ramified, c});
    }
    for (const auto& mp : pair.marked_points()) {
        if (mp.at == zero || mp.at == inf) continue;
        if (!mp.at.is_finite())
            throw std::invalid_argument(
                "cover_pullback: marked points must be rational or infinity");
        // Unramified fibre: m reduced preimages, coefficients unchanged.
        for (int k = 0; k < m; ++k)
            lifted.push_back({P1Point::nth_root(mp.at.coordinate(), m, k), mp.coefficient});
    }
    return P1Pair(std::move(lifted));
}

bool check_cover_volume(const P1Pair& pair, const CyclicCover& cover, const P1Valuation& v,
                        const Rational& x) {
    const VolumeCurve down = p1_volume_curve(pair, v);
    if (x < 0 || x > down.tau())
        throw std::domain_error("check_cover_volume: x outside [0, deg L]");
    const P1Pair up_pair = cover_pullback(pair, cover);
    const VolumeCurve up = p1_volume_curve(up_pair, P1Valuation::generic());
    // The pullback of L - x*v has degree m*(deg L - x) whatever the centre of
    // v is; in dimension one that degree is read off the upstairs curve at
    // m*x.
    return up.value_or_zero(cover.degree * x) == cover.degree * down(x);
}

bool check_cover_monotonicity(const P1Pair& pair, const CyclicCover& cover) {
    return p1_verdict(pair).epsilon_star >= p1_verdict(cover_pullback(pair, cover)).epsilon_star;
}

}  // namespace kstab
