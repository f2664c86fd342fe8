#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "sliceapprox/geometry.hpp"
#include "test_helpers.hpp"

using namespace slice;
using slice::testing::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("cassini membership basics") {
    const CompactDomain cell = CompactDomain::cassini_cell(0.0, 1.0, 2.0);
    CHECK(cell.contains(Quaternion{}));  // |0 + 1| = 1 <= 4

    // q = i t: inside iff |1 - t^2| <= 1
    const CompactDomain unit_cell = CompactDomain::cassini_cell(0.0, 1.0, 1.0);
    CHECK(unit_cell.contains(quat_i));               // t = 1, value 0
    CHECK(unit_cell.contains(quat_i * 1.2));         // |1 - 1.44| = 0.44
    CHECK_FALSE(unit_cell.contains(quat_i * 1.5));   // |1 - 2.25| = 1.25 > 1
    CHECK_FALSE(unit_cell.contains(Quaternion(1.1)));
}

TEST_CASE("cassini cells degenerate to balls at y0 = 0") {
    const CompactDomain cell = CompactDomain::cassini_cell(0.5, 0.0, 1.0);
    const CompactDomain ball = CompactDomain::ball(0.5, 1.0);
    Rng rng(81);
    for (int s = 0; s < 10000; ++s) {
        const Quaternion q = rng.quaternion(1.6);
        CHECK(cell.contains(q) == ball.contains(q));
    }
    CHECK_THROWS_AS(CompactDomain::cassini_cell(0.5, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("membership is axially symmetric (property)") {
    Rng rng(82);
    const CompactDomain domains[] = {
        CompactDomain::ball(0.25, 1.5),
        CompactDomain::cassini_cell(1.0, 1.0, 2.0),
        CompactDomain::starlike_completion(BoundaryKind::Hypocycloid, 3),
    };
    for (const auto& d : domains) {
        for (int s = 0; s < 2000; ++s) {
            const Quaternion q = rng.quaternion(2.0);
            const SliceCoords sc = slice_decompose(q);
            const ImagUnit I = rng.imag_unit();
            const Quaternion rotated = Quaternion(sc.x) + I.quat() * sc.y;
            CHECK(d.contains(q) == d.contains(rotated));
        }
    }
}

TEST_CASE("samplers respect membership and are reproducible") {
    const CompactDomain domains[] = {
        CompactDomain::ball(0.0, 1.0),
        CompactDomain::ball(-0.75, 0.5),
        CompactDomain::cassini_cell(0.0, 1.0, 1.0),
        CompactDomain::cassini_cell(1.0, 1.0, 2.0),
        CompactDomain::cassini_cell(0.0, 2.0, 1.0),  // flagged: y0 >= R
        CompactDomain::starlike_completion(BoundaryKind::Hypocycloid, 4),
    };
    for (const auto& d : domains) {
        const SampleGrid grid = sample(d, 500, 7);
        CHECK(grid.points.size() >= 400);
        for (const Quaternion& q : grid.points) CHECK(d.contains(q));

        const SampleGrid again = sample(d, 500, 7);
        REQUIRE(grid.points.size() == again.points.size());
        for (std::size_t i = 0; i < grid.points.size(); ++i)
            CHECK(grid.points[i] == again.points[i]);  // bit-identical

        const SampleGrid other = sample(d, 500, 8);
        bool identical = grid.points.size() == other.points.size();
        if (identical)
            for (std::size_t i = 0; i < grid.points.size(); ++i)
                identical = identical && grid.points[i] == other.points[i];
        CHECK_FALSE(identical);
    }
}

TEST_CASE("ball sampler includes the real extremal points") {
    const SampleGrid grid = sample(CompactDomain::ball(0.0, 1.0), 200, 3);
    bool has_plus = false, has_minus = false;
    for (const auto& q : grid.points) {
        if (q == Quaternion(1.0)) has_plus = true;
        if (q == Quaternion(-1.0)) has_minus = true;
    }
    CHECK(has_plus);
    CHECK(has_minus);
}

TEST_CASE("sampled points come with their axial companions") {
    const SampleGrid grid = sample(CompactDomain::cassini_cell(0.0, 1.0, 1.0), 300, 11);
    int checked = 0;
    for (const auto& q : grid.points) {
        if (q.imag_norm() == 0.0) continue;
        bool found = false;
        for (const auto& other : grid.points)
            if (other == q.conj()) found = true;
        CHECK(found);
        if (++checked > 50) break;
    }
}

TEST_CASE("unit sphere sampler stays on the sphere") {
    const SampleGrid grid = sample(CompactDomain::unit_sphere(), 400, 5);
    CHECK(grid.points.size() >= 400);
    for (const auto& q : grid.points) CHECK(std::fabs(q.norm() - 1.0) <= 1e-14);
}

TEST_CASE("hypocycloid boundary") {
    // theta = 0: 1 + 1/(m-1) = 3/2 for m = 3
    const PlanarPoint p0 = example_boundary(BoundaryKind::Hypocycloid, 3, 0.0);
    CHECK(p0.x == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(std::fabs(p0.y) < 1e-15);

    // theta and -theta give conjugate points
    for (double theta : {0.3, 1.1, 2.9}) {
        for (int m : {3, 4, 6}) {
            const PlanarPoint a = example_boundary(BoundaryKind::Hypocycloid, m, theta);
            const PlanarPoint b = example_boundary(BoundaryKind::Hypocycloid, m, -theta);
            CHECK(a.x == doctest::Approx(b.x).epsilon(1e-14));
            CHECK(a.y == doctest::Approx(-b.y).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(example_boundary(BoundaryKind::Hypocycloid, 2, 0.0), std::invalid_argument);
}

TEST_CASE("lemniscate boundary satisfies |z^m - 1| = 1") {
    for (int m : {2, 3, 5}) {
        CHECK(boundary_residual(BoundaryKind::Lemniscate, m, 4096) <= 1e-10);
    }
    // branch point: w^m = -1
    CHECK_THROWS_AS(example_boundary(BoundaryKind::Lemniscate, 2, kPi / 2.0), std::domain_error);
}

TEST_CASE("semidisk map is implemented as printed and its residual is reported") {
    // The printed formula with the principal branch traces a curve that is
    // NOT the unit semidisk boundary (it is consistent with a 3x rescale);
    // the residual is reported, not patched.
    const double residual = boundary_residual(BoundaryKind::Semidisk, 0, 2048);
    CHECK(residual > 0.1);
    MESSAGE("semidisk printed-formula residual vs unit semidisk: ", residual);

    // On |theta| < 2pi/3 the curve sits on the radius-3 semidisk arc.
    for (double theta : {0.0, 0.4, 1.2, 1.9}) {
        const PlanarPoint p = example_boundary(BoundaryKind::Semidisk, 0, theta);
        const double r = std::hypot(p.x, p.y);
        CHECK(r == doctest::Approx(3.0).epsilon(1e-9));
    }
    CHECK_THROWS_AS(example_boundary(BoundaryKind::Semidisk, 0, kPi), std::domain_error);
}

TEST_CASE("starlike checks") {
    SUBCASE("balls are starlike about their center") {
        const CompactDomain ball = CompactDomain::ball(0.0, 1.0);
        const SampleGrid grid = sample(ball, 300, 2);
        CHECK(starlike_check(ball, 0.0, grid.points).starlike);
    }

    SUBCASE("hypocycloid completion is starlike about the origin") {
        const CompactDomain d = CompactDomain::starlike_completion(BoundaryKind::Hypocycloid, 3);
        const SampleGrid grid = sample(d, 500, 2);
        CHECK(starlike_check(d, 0.0, grid.points).starlike);
    }

    SUBCASE("annular cassini cell (y0 > R) fails with a witness") {
        const CompactDomain d = CompactDomain::cassini_cell(0.0, 2.0, 1.0);
        CHECK(d.flagged_geometry());
        const SampleGrid grid = sample(d, 200, 2);
        const StarlikeReport report = starlike_check(d, 0.0, grid.points);
        CHECK_FALSE(report.starlike);
        CHECK_FALSE(d.contains(report.witness * report.t_fail));
    }
}

TEST_CASE("sampler rejects impossible requests") {
    CHECK_THROWS_AS(sample(CompactDomain::ball(0.0, 1.0), 0, 1), std::invalid_argument);
}

TEST_CASE("norm bound is sound") {
    Rng rng(83);
    const CompactDomain domains[] = {
        CompactDomain::ball(1.5, 0.75),
        CompactDomain::cassini_cell(1.0, 1.0, 1.0),
    };
    for (const auto& d : domains) {
        const SampleGrid grid = sample(d, 2000, 1);
        for (const auto& q : grid.points) CHECK(q.norm() <= d.norm_bound() + 1e-12);
    }
    // x0=1, y0=1, R=1: M^2 = 1 + 2 sqrt(2) + 2
    const double M = CompactDomain::cassini_cell(1.0, 1.0, 1.0).norm_bound();
    CHECK(M * M == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-14));
}
