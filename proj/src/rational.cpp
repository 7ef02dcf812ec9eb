#include "kstab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kstab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<BigInt> exact_integer_root(const BigInt& value, unsigned m) {
    if (m == 0) throw std::invalid_argument("exact_nth_root: degree must be positive");
    if (value < 0 && m % 2 == 0) return std::nullopt;
    BigInt root;
    // mpz_root returns nonzero iff the root is exact.
    const int exact = mpz_root(root.backend().data(), value.backend().data(), m);
    if (!exact) return std::nullopt;
    return root;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view trimmed = trim(text);
    if (trimmed.empty()) throw std::invalid_argument("parse_rational: empty string");

    const auto slash = trimmed.find('/');
    std::string_view num_part = trim(trimmed.substr(0, slash));
    std::string_view den_part =
        slash == std::string_view::npos ? std::string_view{} : trim(trimmed.substr(slash + 1));

    if (!is_integer_token(num_part, /*allow_sign=*/true))
        throw std::invalid_argument("parse_rational: bad numerator in '" + std::string(text) + "'");

    BigInt num{std::string(num_part)};
    BigInt den{1};
    if (slash != std::string_view::npos) {
        if (!is_integer_token(den_part, /*allow_sign=*/false))
            throw std::invalid_argument("parse_rational: denominator must be a positive integer in '" +
                                        std::string(text) + "'");
        den = BigInt{std::string(den_part)};
        if (den == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
    }
    // The (num, den) constructor canonicalizes; the string constructor would not.
    return Rational{num, den};
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational pow_int(const Rational& base, unsigned exponent) {
    Rational result{1};
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

std::optional<Rational> exact_nth_root(const Rational& value, unsigned m) {
    const auto num_root = exact_integer_root(numerator(value), m);
    if (!num_root) return std::nullopt;
    const auto den_root = exact_integer_root(denominator(value), m);
    if (!den_root) return std::nullopt;
    return Rational{*num_root, *den_root};
}

std::pair<Rational, Rational> sqrt_bracket(const Rational& value, const Rational& width) {
    if (value < 0) throw std::invalid_argument("sqrt_bracket: negative argument");
    if (width <= 0) throw std::invalid_argument("sqrt_bracket: width must be positive");
    if (const auto root = exact_nth_root(value, 2)) return {*root, *root};

    Rational lo{0};
    Rational hi = value < 1 ? Rational{1} : value;
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        if (mid * mid <= value)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

unsigned factorial(unsigned n) {
    unsigned result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace kstab
