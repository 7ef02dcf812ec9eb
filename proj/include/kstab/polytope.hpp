#pragma once

#include <cstdint>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

using LatticeVector = std::vector<std::int64_t>;
using Point = std::vector<Rational>;

bool is_primitive(const LatticeVector& v);
Rational dot(const LatticeVector& v, const Point& u);

// { u : <u, normal> >= -offset }.
struct Halfspace {
    LatticeVector normal;
    Rational offset;
};

// Bounded rational polytope in dimension <= 3, carried in both
// representations: deduplicated halfspaces and the exact vertex list
// (lexicographically sorted, so downstream volume/barycenter fans are
// deterministic). All geometry is exact.
class Polytope {
  public:
    // Enumerates vertices from n-subsets of the halfspaces. Throws
    // std::domain_error when the polyhedron is unbounded (nontrivial
    // recession cone); an empty intersection is fine and yields an empty
    // polytope.
    static Polytope from_halfspaces(int dimension, std::vector<Halfspace> halfspaces);

    int dimension() const { return dim_; }
    bool is_empty() const { return verts_.empty(); }
    const std::vector<Halfspace>& halfspaces() const { return hs_; }
    const std::vector<Point>& vertices() const { return verts_; }

    bool contains(const Point& u) const;
    // min/max of <u, v> over the polytope; requires nonempty.
    Rational min_support(const LatticeVector& v) const;
    Rational max_support(const LatticeVector& v) const;

    // Euclidean volume (0 when empty or lower-dimensional).
    Rational volume() const;
    // Requires volume() > 0.
    Point barycenter() const;

    // Intersection with { u : <u, direction> >= level }. New vertices are the
    // kept ones plus edge/hyperplane crossings; falls back to a fresh vertex
    // enumeration if the polytope is not simple.
    Polytope clip(const LatticeVector& direction, const Rational& level) const;

  private:
    Polytope(int dim, std::vector<Halfspace> hs, std::vector<Point> verts);

    void compute_tight_sets();

    int dim_ = 0;
    std::vector<Halfspace> hs_;
    std::vector<Point> verts_;
    // Per vertex: indices of halfspaces satisfied with equality.
    std::vector<std::vector<std::size_t>> tight_;
};

}  // namespace kstab
