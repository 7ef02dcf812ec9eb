#include "kstab/volfun.hpp"

#include <stdexcept>

namespace kstab {

Rational expected_vanishing(const VolumeCurve& curve) {
    return integrate(curve.body(), Rational{0}, curve.tau()) / curve.total_volume();
}

bool check_tau_upper(const VolumeCurve& curve) {
    const int n = curve.dimension();
    return expected_vanishing(curve) <= Rational(n, n + 1) * curve.tau();
}

bool check_fujita_lower(const VolumeCurve& curve, std::span<const Rational> samples) {
    const unsigned n = static_cast<unsigned>(curve.dimension());
    for (const Rational& x : samples) {
        if (x < 0 || x > curve.tau())
            throw std::domain_error("check_fujita_lower: sample outside [0, tau]");
        const Rational bound = pow_int(1 - x / curve.tau(), n) * curve.total_volume();
        if (curve(x) < bound) return false;
    }
    return true;
}

bool nth_root_superadditive(int n, const Rational& a, const Rational& b, const Rational& c) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("nth_root_superadditive: only n <= 3 is supported");
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("nth_root_superadditive: negative argument");
    if (b == 0) return a >= c;
    if (c == 0) return a >= b;
    const Rational d = a - b - c;
    switch (n) {
        case 1:
            return d >= 0;
        case 2:
            // a >= (sqrt(b)+sqrt(c))^2 = b + c + 2*sqrt(bc)  <=>  d >= 2*sqrt(bc).
            return d >= 0 && d * d >= 4 * b * c;
        case 3: {
            // With y = b^(1/3), z = c^(1/3): a >= (y+z)^3 = b + c + 3*yz(y+z),
            // i.e. d/3 >= u where u = yz(y+z). u is the unique positive root of
            // g(t) = t^3 - 3bc*t - bc(b+c), and g < 0 on [0, u), g >= 0 on
            // [u, oo) (g decreases up to sqrt(bc) <= u, increases after). So
            // d/3 >= u  <=>  d >= 0 and g(d/3) >= 0.
            if (d < 0) return false;
            const Rational t = d / 3;
            const Rational g = t * t * t - 3 * b * c * t - b * c * (b + c);
            return g >= 0;
        }
        default:
            throw std::invalid_argument("nth_root_superadditive: only n <= 3 is supported");
    }
}

bool check_log_concavity(const VolumeCurve& curve, std::span<const ConcavityTriple> triples) {
    const int n = curve.dimension();
    if (n > 3) throw std::invalid_argument("check_log_concavity: only n <= 3 is supported");
    for (const auto& t : triples) {
        if (t.x < 0 || t.x > curve.tau() || t.y < 0 || t.y > curve.tau())
            throw std::domain_error("check_log_concavity: sample outside [0, tau]");
        if (t.lambda < 0 || t.lambda > 1)
            throw std::domain_error("check_log_concavity: lambda outside [0, 1]");
        const Rational mid = t.lambda * t.x + (1 - t.lambda) * t.y;
        const Rational v = curve(mid);
        const Rational b = pow_int(t.lambda, static_cast<unsigned>(n)) * curve(t.x);
        const Rational c = pow_int(1 - t.lambda, static_cast<unsigned>(n)) * curve(t.y);
        if (!nth_root_superadditive(n, v, b, c)) return false;
    }
    return true;
}

}  // namespace kstab
