#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace kstab {

// All arithmetic in the library is exact. Values are kept in lowest terms
// with a positive denominator (GMP's canonical form); every constructor and
// operator used here preserves that, and parse_rational enforces it on input.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "p", "-p" or "p/q" with integer p and positive integer q.
// Throws std::invalid_argument on anything else (including "1/0").
Rational parse_rational(std::string_view text);

// Canonical decimal-free form: "p" or "p/q", q > 1. Round-trips through
// parse_rational.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational pow_int(const Rational& base, unsigned exponent);

bool is_integer(const Rational& value);

// The exact m-th root when `value` is the m-th power of a rational
// (principal root; negative values allowed for odd m).
std::optional<Rational> exact_nth_root(const Rational& value, unsigned m);

// Encloses sqrt(value) in [lo, hi] with hi - lo <= width; collapses to a
// point exactly when `value` is a perfect square. Requires value >= 0,
// width > 0.
std::pair<Rational, Rational> sqrt_bracket(const Rational& value,
                                           const Rational& width);

unsigned factorial(unsigned n);

}  // namespace kstab
