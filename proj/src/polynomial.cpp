#include "kstab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kstab {

namespace {

void strip_trailing_zeros(std::vector<Rational>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(Rational value) {
    Polynomial p;
    if (value != 0) p.coeffs_.push_back(std::move(value));
    return p;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<int>(i)) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    a[0] = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        a[i + 1] = coeffs_[i] / Rational(static_cast<int>(i) + 1);
    return Polynomial(std::move(a));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational{0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational{0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational{0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

Polynomial lagrange_interpolate(const std::vector<Rational>& nodes,
                                const std::vector<Rational>& values) {
    if (nodes.empty() || nodes.size() != values.size())
        throw std::invalid_argument("lagrange_interpolate: node/value size mismatch");
    Polynomial result;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational{1});
        Rational denom{1};
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            if (nodes[j] == nodes[i])
                throw std::invalid_argument("lagrange_interpolate: repeated node");
            basis = basis * Polynomial({-nodes[j], Rational{1}});
            denom *= nodes[i] - nodes[j];
        }
        result = result + (values[i] / denom) * basis;
    }
    return result;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const Rational mag = c[i] < 0 ? Rational(-c[i]) : c[i];
        if (first) {
            if (c[i] < 0) out << "-";
            first = false;
        } else {
            out << (c[i] < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << to_string(mag);
        if (i > 0) {
            if (mag != 1) out << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace kstab
