#include "kstab/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kstab/volfun.hpp"
#include "linalg.hpp"

namespace kstab {

namespace {

std::vector<std::vector<Rational>> rows_from_rays(const std::vector<LatticeVector>& rays,
                                                  const std::vector<int>& cone) {
    std::vector<std::vector<Rational>> rows;
    for (const int i : cone) {
        std::vector<Rational> row;
        for (const std::int64_t x : rays[static_cast<std::size_t>(i)]) row.emplace_back(x);
        rows.push_back(std::move(row));
    }
    return rows;
}

BigInt floor_big(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    BigInt q;
    mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
    return q;
}

BigInt ceil_big(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    BigInt q;
    mpz_cdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
    return q;
}

}  // namespace

FanPair::FanPair(std::vector<LatticeVector> rays, std::vector<std::vector<int>> cones,
                 std::vector<Rational> coefficients)
    : rays_(std::move(rays)), cones_(std::move(cones)), coeffs_(std::move(coefficients)) {
    if (rays_.empty()) throw std::invalid_argument("FanPair: no rays");
    const int n = static_cast<int>(rays_[0].size());
    if (n < 1 || n > 3) throw std::invalid_argument("FanPair: dimension must be 1, 2 or 3");
    for (const auto& r : rays_) {
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("FanPair: ray dimension mismatch");
        if (!is_primitive(r)) throw std::invalid_argument("FanPair: rays must be primitive and nonzero");
    }
    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (std::size_t j = i + 1; j < rays_.size(); ++j)
            if (rays_[i] == rays_[j]) throw std::invalid_argument("FanPair: duplicate ray");

    if (coeffs_.size() != rays_.size())
        throw std::invalid_argument("FanPair: need one coefficient per ray");
    for (const auto& c : coeffs_)
        if (c < 0 || c >= 1)
            throw std::invalid_argument("FanPair: coefficients must lie in [0, 1) (klt)");

    if (cones_.empty()) throw std::invalid_argument("FanPair: no maximal cones");
    std::vector<bool> used(rays_.size(), false);
    std::vector<std::vector<int>> sorted_cones;
    for (const auto& cone : cones_) {
        if (static_cast<int>(cone.size()) != n)
            throw std::invalid_argument("FanPair: maximal cones must have n rays (simplicial)");
        for (const int i : cone) {
            if (i < 0 || i >= static_cast<int>(rays_.size()))
                throw std::invalid_argument("FanPair: cone ray index out of range");
            used[static_cast<std::size_t>(i)] = true;
        }
        std::vector<int> s = cone;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("FanPair: repeated ray inside a cone");
        if (detail::det(rows_from_rays(rays_, cone)) == 0)
            throw std::invalid_argument("FanPair: degenerate maximal cone");
        sorted_cones.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < sorted_cones.size(); ++i)
        for (std::size_t j = i + 1; j < sorted_cones.size(); ++j)
            if (sorted_cones[i] == sorted_cones[j])
                throw std::invalid_argument("FanPair: duplicate maximal cone");
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw std::invalid_argument("FanPair: every ray must appear in a maximal cone");

    // Completeness proxy: in a complete simplicial fan every ridge (an
    // (n-1)-subset of a maximal cone) is shared by exactly two maximal cones.
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& cone : sorted_cones) {
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> ridge;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != drop) ridge.push_back(cone[i]);
            ++ridge_count[ridge];
        }
    }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2)
            throw std::invalid_argument("FanPair: fan is not complete (ridge not shared by 2 cones)");
}

Polytope moment_polytope(const FanPair& fan) {
    const int n = fan.dimension();
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < fan.rays().size(); ++i)
        hs.push_back({fan.rays()[i], 1 - fan.coefficients()[i]});
    Polytope P = Polytope::from_halfspaces(n, std::move(hs));
    if (P.volume() == 0)
        throw std::domain_error("moment_polytope: polytope is not full-dimensional");

    // -(K+Delta) is ample with this normal fan iff each maximal cone's
    // equality system lands on a distinct vertex of P and together they
    // exhaust the vertices.
    std::vector<Point> cone_vertices;
    for (const auto& cone : fan.cones()) {
        std::vector<Rational> rhs;
        for (const int i : cone) rhs.push_back(-(1 - fan.coefficients()[static_cast<std::size_t>(i)]));
        const auto u = detail::solve(rows_from_rays(fan.rays(), cone), rhs);
        if (!u || !P.contains(*u))
            throw std::domain_error("moment_polytope: fan is not the normal fan (not ample)");
        cone_vertices.push_back(*u);
    }
    std::sort(cone_vertices.begin(), cone_vertices.end());
    cone_vertices.erase(std::unique(cone_vertices.begin(), cone_vertices.end()),
                        cone_vertices.end());
    if (cone_vertices.size() != fan.cones().size() || cone_vertices != P.vertices())
        throw std::domain_error("moment_polytope: fan is not the normal fan (vertex mismatch)");

    // Every ray must cut out an actual facet.
    for (const auto& h : P.halfspaces()) {
        std::size_t tight = 0;
        for (const auto& u : P.vertices())
            if (dot(h.normal, u) == -h.offset) ++tight;
        if (tight < static_cast<std::size_t>(n))
            throw std::domain_error("moment_polytope: redundant ray (no facet)");
    }
    return P;
}

ToricModel make_toric_model(const FanPair& fan) {
    ToricModel model{fan, moment_polytope(fan), fan.dimension(), Rational{0}, {}};
    model.Ln = factorial(static_cast<unsigned>(model.n)) * model.polytope.volume();
    model.barycenter = model.polytope.barycenter();
    return model;
}

Rational toric_log_discrepancy(const FanPair& fan, const LatticeVector& v) {
    if (static_cast<int>(v.size()) != fan.dimension())
        throw std::invalid_argument("toric_log_discrepancy: dimension mismatch");
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
        throw std::invalid_argument("toric_log_discrepancy: v must be nonzero");
    std::vector<Rational> target;
    for (const std::int64_t x : v) target.emplace_back(x);
    for (const auto& cone : fan.cones()) {
        // Solve sum_i lambda_i * ray_i = v over the cone's rays; the matrix
        // has the rays as *columns*.
        std::vector<std::vector<Rational>> a(v.size(), std::vector<Rational>(cone.size()));
        for (std::size_t col = 0; col < cone.size(); ++col)
            for (std::size_t row = 0; row < v.size(); ++row)
                a[row][col] = Rational(fan.rays()[static_cast<std::size_t>(cone[col])][row]);
        const auto lambda = detail::solve(a, target);
        if (!lambda) continue;
        if (std::any_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l < 0; }))
            continue;
        Rational A{0};
        for (std::size_t i = 0; i < cone.size(); ++i)
            A += (*lambda)[i] * (1 - fan.coefficients()[static_cast<std::size_t>(cone[i])]);
        return A;
    }
    throw std::logic_error("toric_log_discrepancy: no cone contains v (fan not complete?)");
}

VolumeCurve toric_volume_curve(const Polytope& P, const LatticeVector& v) {
    const int n = P.dimension();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("toric_volume_curve: dimension mismatch");
    const Rational total = factorial(static_cast<unsigned>(n)) * P.volume();
    if (total == 0) throw std::domain_error("toric_volume_curve: polytope has no volume");

    const Rational base = P.min_support(v);
    std::vector<Rational> levels;
    for (const auto& u : P.vertices()) levels.push_back(dot(v, u) - base);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.size() < 2)
        throw std::invalid_argument("toric_volume_curve: v is constant on the polytope");

    // Between consecutive vertex levels the slice combinatorics is fixed, so
    // the slice volume is a polynomial of degree <= n in x; n+1 exact samples
    // pin it down.
    std::vector<Polynomial> pieces;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        std::vector<Rational> nodes, values;
        for (int j = 0; j <= n; ++j) {
            const Rational x = levels[k] + (levels[k + 1] - levels[k]) * Rational(j, n == 0 ? 1 : n);
            nodes.push_back(x);
            values.push_back(factorial(static_cast<unsigned>(n)) * P.clip(v, base + x).volume());
        }
        pieces.push_back(lagrange_interpolate(nodes, values));
    }
    return VolumeCurve(PiecewisePolynomial(std::move(levels), std::move(pieces)), n, total);
}

Rational toric_beta(const ToricModel& model, const LatticeVector& v) {
    const Rational A = toric_log_discrepancy(model.fan, v);
    const Rational base = model.polytope.min_support(v);
    const Rational via_barycenter = model.Ln * (A - (dot(v, model.barycenter) - base));

    const VolumeCurve curve = toric_volume_curve(model.polytope, v);
    const Rational via_curve = A * model.Ln - integrate(curve.body(), Rational{0}, curve.tau());
    if (via_barycenter != via_curve)
        throw std::logic_error("toric_beta: barycenter and curve routes disagree");
    return via_barycenter;
}

Rational toric_beta(const FanPair& fan, const LatticeVector& v) {
    return toric_beta(make_toric_model(fan), v);
}

long long lattice_section_count(const Polytope& P, const LatticeVector& v, long long k,
                                const Rational& x) {
    if (k < 1) throw std::invalid_argument("lattice_section_count: k must be >= 1");
    if (P.is_empty()) return 0;
    const int n = P.dimension();
    const Rational threshold = k * (P.min_support(v) + x);

    std::vector<long long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        LatticeVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        lo[static_cast<std::size_t>(i)] =
            ceil_big(k * P.min_support(e)).convert_to<long long>();
        hi[static_cast<std::size_t>(i)] =
            floor_big(k * P.max_support(e)).convert_to<long long>();
    }

    // Precompute k-scaled halfspace thresholds: w/k in P  <=>  <w, normal> >= -k*offset.
    std::vector<Rational> hs_rhs;
    for (const auto& h : P.halfspaces()) hs_rhs.push_back(-k * h.offset);

    long long count = 0;
    std::vector<long long> w(static_cast<std::size_t>(n));
    const auto accept = [&](const std::vector<long long>& pt) {
        Rational sv{0};
        for (int i = 0; i < n; ++i) sv += Rational(v[static_cast<std::size_t>(i)]) * pt[static_cast<std::size_t>(i)];
        if (sv < threshold) return false;
        for (std::size_t hi_i = 0; hi_i < P.halfspaces().size(); ++hi_i) {
            Rational s{0};
            const auto& nrm = P.halfspaces()[hi_i].normal;
            for (int i = 0; i < n; ++i) s += Rational(nrm[static_cast<std::size_t>(i)]) * pt[static_cast<std::size_t>(i)];
            if (s < hs_rhs[hi_i]) return false;
        }
        return true;
    };
    // Odometer over the integer bounding box.
    w = lo;
    while (true) {
        if (accept(w)) ++count;
        int d = n - 1;
        while (d >= 0 && w[static_cast<std::size_t>(d)] == hi[static_cast<std::size_t>(d)]) {
            w[static_cast<std::size_t>(d)] = lo[static_cast<std::size_t>(d)];
            --d;
        }
        if (d < 0) break;
        ++w[static_cast<std::size_t>(d)];
    }
    return count;
}

std::vector<LatticeVector> primitive_vectors(int dimension, int radius) {
    if (dimension < 1 || radius < 1)
        throw std::invalid_argument("primitive_vectors: need dimension >= 1 and radius >= 1");
    std::vector<LatticeVector> out;
    LatticeVector v(static_cast<std::size_t>(dimension), -radius);
    while (true) {
        if (is_primitive(v)) out.push_back(v);
        int d = dimension - 1;
        while (d >= 0 && v[static_cast<std::size_t>(d)] == radius) {
            v[static_cast<std::size_t>(d)] = -radius;
            --d;
        }
        if (d < 0) break;
        ++v[static_cast<std::size_t>(d)];
    }
    return out;
}

InvariantReport evaluate_monomial_valuation(const ToricModel& model, const LatticeVector& v) {
    const VolumeCurve curve = toric_volume_curve(model.polytope, v);
    return make_report(model.n, model.Ln, toric_log_discrepancy(model.fan, v), curve);
}

}  // namespace kstab
