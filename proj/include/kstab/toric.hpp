#pragma once

#include <cstdint>
#include <vector>

#include "kstab/invariants.hpp"
#include "kstab/polytope.hpp"
#include "kstab/rational.hpp"
#include "kstab/volume_curve.hpp"

namespace kstab {

// A toric log Fano pair in dimension n <= 3: a complete simplicial fan given
// by primitive rays and maximal cones (index lists into the rays), plus a
// boundary coefficient in [0, 1) per ray. Construction validates the
// combinatorics: primitive distinct rays, simplicial cones, every ray used,
// and every ridge shared by exactly two maximal cones (completeness).
// The geometric side — that -(K+Delta) is ample with this normal fan — is
// checked when the moment polytope is built.
class FanPair {
  public:
    FanPair(std::vector<LatticeVector> rays, std::vector<std::vector<int>> cones,
            std::vector<Rational> coefficients);

    int dimension() const { return static_cast<int>(rays_[0].size()); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<std::vector<int>>& cones() const { return cones_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

  private:
    std::vector<LatticeVector> rays_;
    std::vector<std::vector<int>> cones_;
    std::vector<Rational> coeffs_;
};

// P = { u : <u, ray_i> >= -(1 - c_i) }. Throws std::domain_error unless P is
// a full-dimensional polytope whose vertices are exactly the solutions of
// the maximal cones' equality systems (i.e. the pair is toric log Fano with
// the given fan).
Polytope moment_polytope(const FanPair& fan);

// Moment polytope with its headline data, cached for sweeps.
struct ToricModel {
    FanPair fan;
    Polytope polytope;
    int n = 0;
    Rational Ln;        // n! * vol(P)
    Point barycenter;   // of P
};
ToricModel make_toric_model(const FanPair& fan);

// A(v) for the monomial valuation of v != 0: the piecewise-linear extension
// of ray_i -> 1 - c_i over the simplicial cones.
Rational toric_log_discrepancy(const FanPair& fan, const LatticeVector& v);

// x -> n! * vol{ u in P : <u, v> >= min_P <.,v> + x } on [0, tau], assembled
// by exact interpolation between consecutive vertex levels of v.
VolumeCurve toric_volume_curve(const Polytope& P, const LatticeVector& v);

// beta(v) via the barycenter formula Ln * (A(v) - (<b, v> - min_P <.,v>)),
// cross-checked exactly against A*Ln - integral of the volume curve.
Rational toric_beta(const ToricModel& model, const LatticeVector& v);
Rational toric_beta(const FanPair& fan, const LatticeVector& v);

// #{ u in P intersect (1/k) Z^n : <u, v> >= min_P <.,v> + x }. Exhaustive
// over the bounding box; meant for modest k.
long long lattice_section_count(const Polytope& P, const LatticeVector& v, long long k,
                                const Rational& x);

struct SweepEntry {
    LatticeVector v;
    Rational A;
    InvariantReport report;
};

// All primitive vectors of the box [-radius, radius]^n, lexicographic.
std::vector<LatticeVector> primitive_vectors(int dimension, int radius);

InvariantReport evaluate_monomial_valuation(const ToricModel& model, const LatticeVector& v);

// Reports for every primitive v in the box, sorted by betahat (ties broken
// lexicographically by v). The entries are identical between the two
// variants; the first runs the loop with OpenMP, the second is the serial
// reference.
std::vector<SweepEntry> toric_sweep(const FanPair& fan, int radius);
std::vector<SweepEntry> toric_sweep_serial(const FanPair& fan, int radius);

}  // namespace kstab
