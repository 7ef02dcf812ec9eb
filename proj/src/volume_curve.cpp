#include "kstab/volume_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstab {

namespace {

// Exact maximum of a polynomial of degree <= 2 on [lo, hi]; for higher
// degree (not produced by this library) falls back to a dense sample.
Rational max_on_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
    Rational best = std::max(p(lo), p(hi));
    if (p.degree() <= 1) return best;
    if (p.degree() == 2) {
        const auto& c = p.coefficients();
        const Rational vertex = -c[1] / (2 * c[2]);
        if (lo < vertex && vertex < hi) best = std::max(best, p(vertex));
        return best;
    }
    for (int i = 1; i < 32; ++i) {
        const Rational x = lo + (hi - lo) * Rational(i, 32);
        best = std::max(best, p(x));
    }
    return best;
}

}  // namespace

VolumeCurve::VolumeCurve(PiecewisePolynomial body, int dimension, Rational total_volume)
    : body_(std::move(body)), dimension_(dimension), total_volume_(std::move(total_volume)) {
    if (dimension_ < 1) throw std::invalid_argument("VolumeCurve: dimension must be >= 1");
    if (total_volume_ <= 0) throw std::invalid_argument("VolumeCurve: total volume must be positive");
    if (body_.domain_min() != 0) throw std::invalid_argument("VolumeCurve: domain must start at 0");
    if (body_.domain_max() <= 0) throw std::invalid_argument("VolumeCurve: tau must be positive");
    if (body_(Rational{0}) != total_volume_)
        throw std::invalid_argument("VolumeCurve: vol(0) != total volume");
    if (body_(body_.domain_max()) != 0) throw std::invalid_argument("VolumeCurve: vol(tau) != 0");
    if (body_.max_piece_degree() > dimension_)
        throw std::invalid_argument("VolumeCurve: piece degree exceeds dimension");
    const auto& breaks = body_.breakpoints();
    for (std::size_t i = 0; i < body_.pieces().size(); ++i) {
        const Polynomial d = body_.pieces()[i].derivative();
        if (max_on_interval(d, breaks[i], breaks[i + 1]) > 0)
            throw std::invalid_argument("VolumeCurve: curve is not non-increasing");
    }
    // Non-increasing with vol(tau) == 0 already forces vol >= 0 on [0, tau].
}

Rational VolumeCurve::value_or_zero(const Rational& x) const {
    if (x < 0) throw std::domain_error("VolumeCurve: negative argument");
    if (x > tau()) return Rational{0};
    return body_(x);
}

}  // namespace kstab
