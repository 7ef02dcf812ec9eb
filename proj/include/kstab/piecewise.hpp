#pragma once

#include <cstddef>
#include <vector>

#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// Continuous piecewise polynomial on [breakpoints.front(), breakpoints.back()].
// Construction enforces: strictly increasing breakpoints, pieces.size() ==
// breakpoints.size() - 1, and value continuity at every interior breakpoint.
class PiecewisePolynomial {
  public:
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    const Rational& domain_min() const { return breaks_.front(); }
    const Rational& domain_max() const { return breaks_.back(); }

    // Throws std::domain_error outside the domain. At an interior breakpoint
    // both adjacent pieces agree, so the choice of piece is immaterial.
    Rational operator()(const Rational& x) const;
    std::size_t piece_index(const Rational& x) const;

    int max_piece_degree() const;

  private:
    std::vector<Rational> breaks_;
    std::vector<Polynomial> pieces_;
};

// True iff the two functions are identical as functions: same domain and,
// on the common refinement of the breakpoints, equal polynomials piece by
// piece. Differing breakpoint lists are fine when pieces merge.
bool equivalent(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

// Exact integral over [a, b]; requires domain_min <= a <= b <= domain_max.
Rational integrate(const PiecewisePolynomial& f, const Rational& a, const Rational& b);

}  // namespace kstab
