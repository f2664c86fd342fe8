#pragma once

// Axially symmetric compact domains: balls with real centers, Cassini cells,
// the unit sphere, and starlike completions of planar regions given by a
// boundary curve.  All membership reduces to a planar test in slice
// coordinates (x, y = |Im q|).

#include <cstdint>
#include <string>
#include <vector>

#include "sliceapprox/quaternion.hpp"

namespace slice {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class BoundaryKind { Hypocycloid, Lemniscate, Semidisk };

// Parametric boundary maps of the three planar model regions.
//   Hypocycloid(m >= 3):  z(theta) = e^{i theta} + e^{-(m-1) i theta}/(m-1)
//   Lemniscate(m >= 2):   z = w (1 + w^{-m})^{1/m},  w = e^{i theta}
//   Semidisk:             the printed rational-plus-(3/2)-power map
// Fractional powers take the principal branch; evaluation at a branch point
// throws std::domain_error.
PlanarPoint example_boundary(BoundaryKind kind, int m, double theta);

// Angular half-widths around parameter values the map cannot be evaluated
// at (branch points, pole of the semidisk map); empty when the curve is
// entire.
std::vector<double> boundary_exclusion_angles(BoundaryKind kind, int m);

// Max deviation of the mapped circle from the reference boundary
// (|z^m - 1| = 1 for lemniscates, the unit semidisk boundary for Semidisk),
// sampled away from exclusion arcs.  Hypocycloids have no implicit form and
// return 0.
double boundary_residual(BoundaryKind kind, int m, int samples = 4096);

class CompactDomain {
  public:
    enum class Kind { Ball, CassiniCell, UnitSphere, StarlikeCompletion };

    static CompactDomain ball(double x0, double radius);
    static CompactDomain cassini_cell(double x0, double y0, double radius);
    static CompactDomain unit_sphere();
    // Region bounded by the given curve, closed under axial symmetry; the
    // curve is polygonized once at construction.
    static CompactDomain starlike_completion(BoundaryKind kind, int m, int resolution = 4096);

    Kind kind() const { return kind_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double radius() const { return radius_; }

    bool contains(const Quaternion& q, bool strict_interior = false) const;
    // Same test in slice coordinates (y >= 0).
    bool contains_planar(double x, double y, bool strict_interior = false) const;

    // An upper bound for |q| over the domain.
    double norm_bound() const;

    // Cassini cells with y0 >= R have a cross-section that misses the real
    // axis near the center; starlike reasoning fails there.
    bool flagged_geometry() const;

    // [xmin, xmax] x [0, ymax] box enclosing the planar cross-section.
    struct PlanarBox {
        double xmin = 0.0, xmax = 0.0, ymax = 0.0;
    };
    PlanarBox planar_box() const;

    std::string describe() const;

  private:
    CompactDomain() = default;

    Kind kind_ = Kind::Ball;
    double x0_ = 0.0;
    double y0_ = 0.0;
    double radius_ = 1.0;
    std::vector<PlanarPoint> polygon_;  // StarlikeCompletion only
    double poly_xmin_ = 0.0, poly_xmax_ = 0.0, poly_ymax_ = 0.0;
};

struct SampleGrid {
    std::vector<Quaternion> points;
    int requested = 0;
    std::uint64_t seed = 0;
    std::string domain;
};

// Deterministic stratified grid: (x, y) from jittered strata over the planar
// cross-section (rejection against membership), slice units from a
// low-discrepancy set, each point paired with its companion x - I y.
// Real-axis and extremal points are included where the variant has them.
// Throws std::runtime_error if the cross-section cannot be hit.
SampleGrid sample(const CompactDomain& d, int count, std::uint64_t seed);

struct StarlikeReport {
    bool starlike = false;
    Quaternion witness{};   // first point whose segment leaves the domain
    double t_fail = 0.0;    // segment parameter at the failure
};

// Checks that t q + (1-t) center stays inside for every sampled q and a
// uniform t-grid; sampling resolution only, not a proof.
StarlikeReport starlike_check(const CompactDomain& d, double center,
                              const std::vector<Quaternion>& samples, int t_samples = 50);

}  // namespace slice
