#include "kstab/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "linalg.hpp"

namespace kstab {

namespace {

Rational dot_qq(const Point& a, const Point& b) {
    Rational s{0};
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Strict angular order around the origin for nonzero 2D offsets; used only
// after the caller has ruled out degenerate (collinear) vertex sets, where
// distinct extreme points of a convex polygon can never share a ray.
bool angle_less(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
    const auto half = [](const std::pair<Rational, Rational>& p) {
        return (p.second < 0 || (p.second == 0 && p.first < 0)) ? 1 : 0;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Rational cross = a.first * b.second - a.second * b.first;
    return cross > 0;
}

std::vector<std::size_t> sort_polygon(const std::vector<std::pair<Rational, Rational>>& pts) {
    std::pair<Rational, Rational> c{Rational{0}, Rational{0}};
    for (const auto& p : pts) {
        c.first += p.first;
        c.second += p.second;
    }
    c.first /= static_cast<int>(pts.size());
    c.second /= static_cast<int>(pts.size());
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return angle_less({pts[i].first - c.first, pts[i].second - c.second},
                          {pts[j].first - c.first, pts[j].second - c.second});
    });
    return order;
}

bool points_affinely_span_2d(const std::vector<std::pair<Rational, Rational>>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Rational cross = (pts[i].first - pts[0].first) * (pts[j].second - pts[0].second) -
                                   (pts[i].second - pts[0].second) * (pts[j].first - pts[0].first);
            if (cross != 0) return true;
        }
    return false;
}

Rational det3_cols(const Point& a, const Point& b, const Point& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Point minus(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

bool is_primitive(const LatticeVector& v) {
    std::int64_t g = 0;
    for (const std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g == 1;
}

Rational dot(const LatticeVector& v, const Point& u) {
    Rational s{0};
    for (std::size_t i = 0; i < v.size(); ++i) s += Rational(v[i]) * u[i];
    return s;
}

Polytope::Polytope(int dim, std::vector<Halfspace> hs, std::vector<Point> verts)
    : dim_(dim), hs_(std::move(hs)), verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    compute_tight_sets();
}

void Polytope::compute_tight_sets() {
    tight_.assign(verts_.size(), {});
    for (std::size_t vi = 0; vi < verts_.size(); ++vi)
        for (std::size_t hi = 0; hi < hs_.size(); ++hi)
            if (dot(hs_[hi].normal, verts_[vi]) == -hs_[hi].offset) tight_[vi].push_back(hi);
}

Polytope Polytope::from_halfspaces(int dimension, std::vector<Halfspace> halfspaces) {
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("Polytope: dimension must be 1, 2 or 3");

    // Normalize (primitive normals) and keep only the tightest offset per
    // normal direction.
    std::vector<Halfspace> hs;
    bool trivially_empty = false;
    for (auto& h : halfspaces) {
        if (static_cast<int>(h.normal.size()) != dimension)
            throw std::invalid_argument("Polytope: halfspace dimension mismatch");
        std::int64_t g = 0;
        for (const std::int64_t x : h.normal) g = std::gcd(g, x < 0 ? -x : x);
        if (g == 0) {
            if (h.offset < 0) trivially_empty = true;  // 0 >= positive constant
            continue;
        }
        if (g > 1) {
            for (auto& x : h.normal) x /= g;
            h.offset /= g;
        }
        auto it = std::find_if(hs.begin(), hs.end(),
                               [&](const Halfspace& k) { return k.normal == h.normal; });
        if (it == hs.end())
            hs.push_back(std::move(h));
        else
            it->offset = std::min(it->offset, h.offset);
    }
    if (trivially_empty) return Polytope(dimension, std::move(hs), {});

    std::vector<std::vector<Rational>> normals;
    for (const auto& h : hs) {
        std::vector<Rational> row(h.normal.size());
        for (std::size_t i = 0; i < h.normal.size(); ++i) row[i] = Rational(h.normal[i]);
        normals.push_back(std::move(row));
    }
    // A feasible set whose normals do not span contains a line (or the input
    // fan was degenerate); either way it is not a polytope.
    if (detail::rank(normals) < dimension)
        throw std::domain_error("Polytope: constraints do not bound (normals do not span)");

    // Candidate vertices: solutions of n-subsets that satisfy everything.
    std::vector<Point> verts;
    const std::size_t m = hs.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(dimension));
    const auto try_subset = [&](const std::vector<std::size_t>& subset) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (const std::size_t i : subset) {
            a.push_back(normals[i]);
            b.push_back(-hs[i].offset);
        }
        const auto u = detail::solve(a, b);
        if (!u) return;
        for (const auto& h : hs)
            if (dot(h.normal, *u) < -h.offset) return;
        verts.push_back(*u);
    };
    // Lexicographic subsets of size `dimension`.
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (m >= idx.size()) {
        while (true) {
            try_subset(idx);
            int k = dimension - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] ==
                                 m - static_cast<std::size_t>(dimension - k))
                --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < dimension; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    // With spanning normals, a nonempty polyhedron has a vertex; no vertices
    // means the constraints are inconsistent.
    if (verts.empty()) return Polytope(dimension, std::move(hs), {});

    // Reject a nontrivial recession cone: any extreme ray of
    // { w : <w, normal_i> >= 0 } shows up as the null direction of some
    // rank-(n-1) subset of normals.
    std::vector<Point> ray_candidates;
    if (dimension == 1) {
        ray_candidates.push_back({Rational{1}});
    } else if (dimension == 2) {
        for (const auto& h : hs)
            ray_candidates.push_back({Rational(-h.normal[1]), Rational(h.normal[0])});
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto& p = hs[i].normal;
                const auto& q = hs[j].normal;
                Point w{Rational(p[1] * q[2] - p[2] * q[1]), Rational(p[2] * q[0] - p[0] * q[2]),
                        Rational(p[0] * q[1] - p[1] * q[0])};
                if (w[0] != 0 || w[1] != 0 || w[2] != 0) ray_candidates.push_back(std::move(w));
            }
    }
    for (const auto& w : ray_candidates) {
        for (const int sign : {1, -1}) {
            bool recession = true;
            for (const auto& h : hs)
                if (sign * dot(h.normal, w) < 0) {
                    recession = false;
                    break;
                }
            if (recession) throw std::domain_error("Polytope: polyhedron is unbounded");
        }
    }

    return Polytope(dimension, std::move(hs), std::move(verts));
}

bool Polytope::contains(const Point& u) const {
    for (const auto& h : hs_)
        if (dot(h.normal, u) < -h.offset) return false;
    return true;
}

Rational Polytope::min_support(const LatticeVector& v) const {
    if (verts_.empty()) throw std::domain_error("Polytope: empty polytope has no support");
    Rational best = dot(v, verts_[0]);
    for (const auto& u : verts_) best = std::min(best, dot(v, u));
    return best;
}

Rational Polytope::max_support(const LatticeVector& v) const {
    if (verts_.empty()) throw std::domain_error("Polytope: empty polytope has no support");
    Rational best = dot(v, verts_[0]);
    for (const auto& u : verts_) best = std::max(best, dot(v, u));
    return best;
}

Rational Polytope::volume() const {
    Rational vol{0};
    Point unused;
    if (verts_.size() < static_cast<std::size_t>(dim_) + 1) return vol;
    switch (dim_) {
        case 1: {
            Rational lo = verts_.front()[0], hi = verts_.front()[0];
            for (const auto& u : verts_) {
                lo = std::min(lo, u[0]);
                hi = std::max(hi, u[0]);
            }
            return hi - lo;
        }
        case 2: {
            std::vector<std::pair<Rational, Rational>> pts;
            for (const auto& u : verts_) pts.emplace_back(u[0], u[1]);
            if (!points_affinely_span_2d(pts)) return Rational{0};
            const auto order = sort_polygon(pts);
            // Fan around the vertex centroid: all signed terms agree in sign
            // for a convex polygon, so the absolute total is twice the area.
            Point c{Rational{0}, Rational{0}};
            for (const auto& p : pts) {
                c[0] += p.first;
                c[1] += p.second;
            }
            c[0] /= static_cast<int>(pts.size());
            c[1] /= static_cast<int>(pts.size());
            Rational twice{0};
            for (std::size_t i = 0; i < order.size(); ++i) {
                const auto& a = pts[order[i]];
                const auto& b = pts[order[(i + 1) % order.size()]];
                twice += (a.first - c[0]) * (b.second - c[1]) - (a.second - c[1]) * (b.first - c[0]);
            }
            return (twice < 0 ? -twice : twice) / 2;
        }
        case 3: {
            // Sum of |cone over each facet polygon from the vertex centroid|.
            Point apex{Rational{0}, Rational{0}, Rational{0}};
            for (const auto& u : verts_)
                for (int i = 0; i < 3; ++i) apex[static_cast<std::size_t>(i)] += u[static_cast<std::size_t>(i)];
            for (int i = 0; i < 3; ++i)
                apex[static_cast<std::size_t>(i)] /= static_cast<int>(verts_.size());
            Rational six_vol{0};
            for (std::size_t hi = 0; hi < hs_.size(); ++hi) {
                std::vector<std::size_t> facet;
                for (std::size_t vi = 0; vi < verts_.size(); ++vi)
                    if (std::find(tight_[vi].begin(), tight_[vi].end(), hi) != tight_[vi].end())
                        facet.push_back(vi);
                if (facet.size() < 3) continue;
                // Project the facet along a coordinate the normal does not
                // kill; the projection is a bijection on the facet plane, so
                // the angular order of the polygon survives.
                const auto& nrm = hs_[hi].normal;
                int drop = 0;
                for (int k = 1; k < 3; ++k) {
                    const std::int64_t a = nrm[static_cast<std::size_t>(k)];
                    const std::int64_t b = nrm[static_cast<std::size_t>(drop)];
                    if ((a < 0 ? -a : a) > (b < 0 ? -b : b)) drop = k;
                }
                std::vector<std::pair<Rational, Rational>> pts;
                for (const std::size_t vi : facet) {
                    std::vector<Rational> proj;
                    for (int k = 0; k < 3; ++k)
                        if (k != drop) proj.push_back(verts_[vi][static_cast<std::size_t>(k)]);
                    pts.emplace_back(proj[0], proj[1]);
                }
                if (!points_affinely_span_2d(pts)) continue;
                const auto order = sort_polygon(pts);
                Rational facet_sum{0};
                const Point& w0 = verts_[facet[order[0]]];
                for (std::size_t i = 1; i + 1 < order.size(); ++i)
                    facet_sum += det3_cols(minus(w0, apex), minus(verts_[facet[order[i]]], apex),
                                           minus(verts_[facet[order[i + 1]]], apex));
                six_vol += facet_sum < 0 ? -facet_sum : facet_sum;
            }
            return six_vol / 6;
        }
        default:
            return vol;
    }
}

Point Polytope::barycenter() const {
    const Rational vol = volume();
    if (vol == 0) throw std::domain_error("Polytope: barycenter needs positive volume");
    Point num(static_cast<std::size_t>(dim_), Rational{0});
    switch (dim_) {
        case 1: {
            Rational lo = verts_.front()[0], hi = verts_.front()[0];
            for (const auto& u : verts_) {
                lo = std::min(lo, u[0]);
                hi = std::max(hi, u[0]);
            }
            num[0] = (lo + hi) / 2;
            return num;
        }
        case 2: {
            std::vector<std::pair<Rational, Rational>> pts;
            for (const auto& u : verts_) pts.emplace_back(u[0], u[1]);
            const auto order = sort_polygon(pts);
            Point c{Rational{0}, Rational{0}};
            for (const auto& p : pts) {
                c[0] += p.first;
                c[1] += p.second;
            }
            c[0] /= static_cast<int>(pts.size());
            c[1] /= static_cast<int>(pts.size());
            for (std::size_t i = 0; i < order.size(); ++i) {
                const auto& a = pts[order[i]];
                const auto& b = pts[order[(i + 1) % order.size()]];
                Rational signed_twice =
                    (a.first - c[0]) * (b.second - c[1]) - (a.second - c[1]) * (b.first - c[0]);
                if (signed_twice < 0) signed_twice = -signed_twice;
                // centroid of triangle (c, a, b), weighted by its area
                num[0] += (c[0] + a.first + b.first) / 3 * signed_twice / 2;
                num[1] += (c[1] + a.second + b.second) / 3 * signed_twice / 2;
            }
            for (auto& x : num) x /= vol;
            return num;
        }
        case 3: {
            Point apex{Rational{0}, Rational{0}, Rational{0}};
            for (const auto& u : verts_)
                for (std::size_t i = 0; i < 3; ++i) apex[i] += u[i];
            for (std::size_t i = 0; i < 3; ++i) apex[i] /= static_cast<int>(verts_.size());
            for (std::size_t hi = 0; hi < hs_.size(); ++hi) {
                std::vector<std::size_t> facet;
                for (std::size_t vi = 0; vi < verts_.size(); ++vi)
                    if (std::find(tight_[vi].begin(), tight_[vi].end(), hi) != tight_[vi].end())
                        facet.push_back(vi);
                if (facet.size() < 3) continue;
                const auto& nrm = hs_[hi].normal;
                int drop = 0;
                for (int k = 1; k < 3; ++k) {
                    const std::int64_t a = nrm[static_cast<std::size_t>(k)];
                    const std::int64_t b = nrm[static_cast<std::size_t>(drop)];
                    if ((a < 0 ? -a : a) > (b < 0 ? -b : b)) drop = k;
                }
                std::vector<std::pair<Rational, Rational>> pts;
                for (const std::size_t vi : facet) {
                    std::vector<Rational> proj;
                    for (int k = 0; k < 3; ++k)
                        if (k != drop) proj.push_back(verts_[vi][static_cast<std::size_t>(k)]);
                    pts.emplace_back(proj[0], proj[1]);
                }
                if (!points_affinely_span_2d(pts)) continue;
                const auto order = sort_polygon(pts);
                const Point& w0 = verts_[facet[order[0]]];
                // Per-facet sign: interior apex sees the sorted polygon with a
                // single orientation, so all tetra determinants share it.
                std::vector<Rational> dets;
                Rational facet_sum{0};
                for (std::size_t i = 1; i + 1 < order.size(); ++i) {
                    dets.push_back(det3_cols(minus(w0, apex), minus(verts_[facet[order[i]]], apex),
                                             minus(verts_[facet[order[i + 1]]], apex)));
                    facet_sum += dets.back();
                }
                const int sign = facet_sum < 0 ? -1 : 1;
                for (std::size_t i = 1; i + 1 < order.size(); ++i) {
                    const Rational piece = sign * dets[i - 1] / 6;
                    const Point& a = verts_[facet[order[i]]];
                    const Point& b = verts_[facet[order[i + 1]]];
                    for (std::size_t k = 0; k < 3; ++k)
                        num[k] += piece * (apex[k] + w0[k] + a[k] + b[k]) / 4;
                }
            }
            for (auto& x : num) x /= vol;
            return num;
        }
        default:
            throw std::logic_error("Polytope: unsupported dimension");
    }
}

Polytope Polytope::clip(const LatticeVector& direction, const Rational& level) const {
    if (static_cast<int>(direction.size()) != dim_)
        throw std::invalid_argument("Polytope: clip direction dimension mismatch");

    // gcd-normalize the new constraint and merge it into the halfspace list
    // the same way from_halfspaces would.
    Halfspace extra{direction, -level};
    std::int64_t g = 0;
    for (const std::int64_t x : extra.normal) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::invalid_argument("Polytope: clip direction is zero");
    if (g > 1) {
        for (auto& x : extra.normal) x /= g;
        extra.offset /= g;
    }
    std::vector<Halfspace> merged = hs_;
    {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const Halfspace& k) { return k.normal == extra.normal; });
        if (it == merged.end())
            merged.push_back(extra);
        else
            it->offset = std::min(it->offset, extra.offset);
    }

    // The edge walk below assumes a simple polytope (every vertex on exactly
    // n facets); fall back to a fresh enumeration otherwise.
    bool simple = !verts_.empty();
    for (const auto& t : tight_)
        if (static_cast<int>(t.size()) != dim_) simple = false;
    if (!simple) return from_halfspaces(dim_, std::move(merged));

    std::vector<Rational> value(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) value[i] = dot(direction, verts_[i]);

    std::vector<Point> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (value[i] >= level) out.push_back(verts_[i]);

    // Walk edges (vertex pairs sharing n-1 facets in a simple polytope) and
    // add the crossing point of every edge the hyperplane cuts strictly.
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j) {
            std::size_t common = 0;
            for (const std::size_t t : tight_[i])
                if (std::find(tight_[j].begin(), tight_[j].end(), t) != tight_[j].end()) ++common;
            if (common + 1 < static_cast<std::size_t>(dim_)) continue;
            const std::size_t lo = value[i] < value[j] ? i : j;
            const std::size_t hi = lo == i ? j : i;
            if (!(value[lo] < level && level < value[hi])) continue;
            const Rational t = (level - value[lo]) / (value[hi] - value[lo]);
            Point p(verts_[lo].size());
            for (std::size_t k = 0; k < p.size(); ++k)
                p[k] = verts_[lo][k] + t * (verts_[hi][k] - verts_[lo][k]);
            out.push_back(std::move(p));
        }

    return Polytope(dim_, std::move(merged), std::move(out));
}

}  // namespace kstab
