#include "kstab/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstab {

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints,
                                         std::vector<Polynomial> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.empty() || breaks_.size() != pieces_.size() + 1)
        throw std::invalid_argument("PiecewisePolynomial: need k pieces and k+1 breakpoints");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("PiecewisePolynomial: breakpoints must strictly increase");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i](breaks_[i + 1]) != pieces_[i + 1](breaks_[i + 1]))
            throw std::invalid_argument("PiecewisePolynomial: discontinuity at interior breakpoint");
}

std::size_t PiecewisePolynomial::piece_index(const Rational& x) const {
    if (x < domain_min() || x > domain_max())
        throw std::domain_error("PiecewisePolynomial: argument outside domain");
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    const std::size_t idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - breaks_.begin() - 1, 0));
    return std::min(idx, pieces_.size() - 1);
}

Rational PiecewisePolynomial::operator()(const Rational& x) const {
    return pieces_[piece_index(x)](x);
}

int PiecewisePolynomial::max_piece_degree() const {
    int d = -1;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

bool equivalent(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    if (a.domain_min() != b.domain_min() || a.domain_max() != b.domain_max()) return false;
    std::vector<Rational> merged;
    merged.reserve(a.breakpoints().size() + b.breakpoints().size());
    std::merge(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
               b.breakpoints().end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    // Polynomials agreeing on an interval are equal, so comparing the active
    // pieces on each refined subinterval decides equality as functions.
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        const Rational mid = (merged[i] + merged[i + 1]) / 2;
        if (a.pieces()[a.piece_index(mid)] != b.pieces()[b.piece_index(mid)]) return false;
    }
    return true;
}

Rational integrate(const PiecewisePolynomial& f, const Rational& a, const Rational& b) {
    if (a > b) throw std::invalid_argument("integrate: bounds out of order");
    if (a < f.domain_min() || b > f.domain_max())
        throw std::domain_error("integrate: bounds outside domain");
    if (a == b) return Rational{0};
    Rational total{0};
    const auto& breaks = f.breakpoints();
    for (std::size_t i = 0; i < f.pieces().size(); ++i) {
        const Rational lo = std::max(a, breaks[i]);
        const Rational hi = std::min(b, breaks[i + 1]);
        if (lo >= hi) continue;
        const Polynomial F = f.pieces()[i].antiderivative();
        total += F(hi) - F(lo);
    }
    return total;
}

}  // namespace kstab
