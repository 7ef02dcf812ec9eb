#pragma once

#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree with no trailing zeros (the zero polynomial is empty).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coefficients);
    static Polynomial constant(Rational value);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;
    Polynomial derivative() const;
    // Antiderivative with constant term 0.
    Polynomial antiderivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    bool operator==(const Polynomial&) const = default;

  private:
    std::vector<Rational> coeffs_;
};

// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
// Nodes must be pairwise distinct.
Polynomial lagrange_interpolate(const std::vector<Rational>& nodes,
                                const std::vector<Rational>& values);

// Human-readable form for diagnostics, e.g. "9 - 1/2*x^2".
std::string to_string(const Polynomial& p);

}  // namespace kstab
