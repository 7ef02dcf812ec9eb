#pragma once

#include "kstab/piecewise.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// The function x -> vol(L - xF) of a log Fano pair of dimension n, as a
// validated piecewise polynomial on [0, tau]. Construction checks, exactly:
//   * domain is [0, tau] with tau > 0,
//   * vol(0) == total_volume > 0 and vol(tau) == 0,
//   * every piece has degree <= n,
//   * the curve is non-increasing (derivative maxima are located exactly for
//     piece degree <= 3, i.e. everywhere the library produces curves).
// Continuity is already enforced by PiecewisePolynomial.
class VolumeCurve {
  public:
    VolumeCurve(PiecewisePolynomial body, int dimension, Rational total_volume);

    int dimension() const { return dimension_; }
    const Rational& total_volume() const { return total_volume_; }
    const Rational& tau() const { return body_.domain_max(); }
    const PiecewisePolynomial& body() const { return body_; }

    Rational operator()(const Rational& x) const { return body_(x); }
    // vol extended by zero beyond tau; requires x >= 0.
    Rational value_or_zero(const Rational& x) const;

  private:
    PiecewisePolynomial body_;
    int dimension_;
    Rational total_volume_;
};

}  // namespace kstab
