#include "sliceapprox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace slice {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
}

// Even-odd ray crossing; points exactly on an edge are unspecified, which is
// fine at sampling resolution.
bool point_in_polygon(const std::vector<PlanarPoint>& poly, double px, double py) {
    bool inside = false;
    const size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const bool cross = (poly[i].y > py) != (poly[j].y > py);
        if (cross) {
            const double t = (py - poly[j].y) / (poly[i].y - poly[j].y);
            const double xi = poly[j].x + t * (poly[i].x - poly[j].x);
            if (px < xi) inside = !inside;
        }
    }
    return inside;
}

std::complex<double> boundary_point(BoundaryKind kind, int m, double theta) {
    using cplx = std::complex<double>;
    switch (kind) {
        case BoundaryKind::Hypocycloid: {
            if (m < 3) throw std::invalid_argument("hypocycloid needs m >= 3");
            const double inv = 1.0 / (m - 1);
            return cplx(std::cos(theta) + inv * std::cos((m - 1) * theta),
                        std::sin(theta) - inv * std::sin((m - 1) * theta));
        }
        case BoundaryKind::Lemniscate: {
            if (m < 2) throw std::invalid_argument("lemniscate needs m >= 2");
            const cplx w = std::polar(1.0, theta);
            const cplx radicand = 1.0 + std::pow(w, -m);
            if (std::abs(radicand) < 1e-14)
                throw std::domain_error("lemniscate boundary: branch point");
            return w * std::pow(radicand, 1.0 / m);
        }
        case BoundaryKind::Semidisk: {
            const cplx w = std::polar(1.0, theta);
            const cplx radicand = w * w + w + 1.0;
            const cplx den = w * (w + 1.0) * std::sqrt(3.0);
            if (std::abs(radicand) < 1e-14 || std::abs(den) < 1e-14)
                throw std::domain_error("semidisk boundary: branch point or pole");
            const cplx num =
                2.0 * (w * w * w - 1.0) + 3.0 * (w * w - w) + 2.0 * std::pow(radicand, 1.5);
            return num / den;
        }
    }
    throw std::invalid_argument("unknown boundary kind");
}

double dist_to_unit_semidisk_boundary(std::complex<double> z) {
    // Boundary = right-half unit arc plus the segment [-i, i].
    const double r = std::abs(z);
    double d_arc;
    if (z.real() >= 0.0) {
        d_arc = std::fabs(r - 1.0);
    } else {
        // nearest arc points are the corners +-i
        d_arc = std::min(std::abs(z - std::complex<double>(0, 1)),
                         std::abs(z - std::complex<double>(0, -1)));
    }
    double d_seg;
    if (std::fabs(z.imag()) <= 1.0)
        d_seg = std::fabs(z.real());
    else
        d_seg = std::abs(std::complex<double>(z.real(), std::fabs(z.imag()) - 1.0));
    return std::min(d_arc, d_seg);
}

}  // namespace

PlanarPoint example_boundary(BoundaryKind kind, int m, double theta) {
    const auto z = boundary_point(kind, m, theta);
    return {z.real(), z.imag()};
}

std::vector<double> boundary_exclusion_angles(BoundaryKind kind, int m) {
    std::vector<double> angles;
    switch (kind) {
        case BoundaryKind::Hypocycloid:
            break;
        case BoundaryKind::Lemniscate:
            // w^m = -1: the leaves meet at the origin
            for (int s = 0; s < m; ++s) angles.push_back((2.0 * s + 1.0) * kPi / m);
            break;
        case BoundaryKind::Semidisk:
            angles = {2.0 * kPi / 3.0, -2.0 * kPi / 3.0, kPi};
            break;
    }
    return angles;
}

double boundary_residual(BoundaryKind kind, int m, int samples) {
    if (kind == BoundaryKind::Hypocycloid) return 0.0;
    const auto excluded = boundary_exclusion_angles(kind, m);
    const double guard = 16.0 * kPi / samples;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double theta = -kPi + (s + 0.5) * 2.0 * kPi / samples;
        bool skip = false;
        for (double a : excluded) {
            double diff = std::remainder(theta - a, 2.0 * kPi);
            if (std::fabs(diff) < guard) skip = true;
        }
        if (skip) continue;
        const auto z = boundary_point(kind, m, theta);
        double residual = 0.0;
        if (kind == BoundaryKind::Lemniscate)
            residual = std::fabs(std::abs(std::pow(z, m) - 1.0) - 1.0);
        else
            residual = dist_to_unit_semidisk_boundary(z);
        worst = std::max(worst, residual);
    }
    return worst;
}

CompactDomain CompactDomain::ball(double x0, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
    CompactDomain d;
    d.kind_ = Kind::Ball;
    d.x0_ = x0;
    d.radius_ = radius;
    return d;
}

CompactDomain CompactDomain::cassini_cell(double x0, double y0, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("cassini_cell: radius must be positive");
    // y0 = 0 degenerates to the plain ball B(x0; R) and is allowed.
    if (y0 < 0.0) throw std::invalid_argument("cassini_cell: y0 must be nonnegative");
    CompactDomain d;
    d.kind_ = Kind::CassiniCell;
    d.x0_ = x0;
    d.y0_ = y0;
    d.radius_ = radius;
    return d;
}

CompactDomain CompactDomain::unit_sphere() {
    CompactDomain d;
    d.kind_ = Kind::UnitSphere;
    d.radius_ = 1.0;
    return d;
}

CompactDomain CompactDomain::starlike_completion(BoundaryKind kind, int m, int resolution) {
    CompactDomain d;
    d.kind_ = Kind::StarlikeCompletion;
    d.polygon_.reserve(resolution);
    const auto excluded = boundary_exclusion_angles(kind, m);
    const double guard = 16.0 * kPi / resolution;
    for (int s = 0; s < resolution; ++s) {
        const double theta = -kPi + (s + 0.5) * 2.0 * kPi / resolution;
        bool skip = false;
        for (double a : excluded)
            if (std::fabs(std::remainder(theta - a, 2.0 * kPi)) < guard) skip = true;
        if (skip) continue;
        d.polygon_.push_back(example_boundary(kind, m, theta));
    }
    if (d.polygon_.size() < 8)
        throw std::runtime_error("starlike_completion: boundary polygonization failed");
    d.poly_xmin_ = d.poly_xmax_ = d.polygon_[0].x;
    d.poly_ymax_ = 0.0;
    for (const auto& p : d.polygon_) {
        d.poly_xmin_ = std::min(d.poly_xmin_, p.x);
        d.poly_xmax_ = std::max(d.poly_xmax_, p.x);
        d.poly_ymax_ = std::max(d.poly_ymax_, std::fabs(p.y));
    }
    return d;
}

bool CompactDomain::contains(const Quaternion& q, bool strict_interior) const {
    return contains_planar(q.w, q.imag_norm(), strict_interior);
}

bool CompactDomain::contains_planar(double x, double y, bool strict_interior) const {
    switch (kind_) {
        case Kind::Ball: {
            const double d2 = (x - x0_) * (x - x0_) + y * y;
            return strict_interior ? d2 < radius_ * radius_ : d2 <= radius_ * radius_;
        }
        case Kind::CassiniCell: {
            const double re = (x - x0_) * (x - x0_) - y * y + y0_ * y0_;
            const double im = 2.0 * (x - x0_) * y;
            const double n2 = re * re + im * im;
            const double r4 = radius_ * radius_ * radius_ * radius_;
            return strict_interior ? n2 < r4 : n2 <= r4;
        }
        case Kind::UnitSphere: {
            if (strict_interior) return false;  // the sphere has empty interior
            const double n = std::sqrt(x * x + y * y);
            return std::fabs(n - 1.0) <= 1e-12;
        }
        case Kind::StarlikeCompletion:
            return point_in_polygon(polygon_, x, std::fabs(y));
    }
    return false;
}

double CompactDomain::norm_bound() const {
    switch (kind_) {
        case Kind::Ball:
            return std::fabs(x0_) + radius_;
        case Kind::CassiniCell:
            return std::sqrt(radius_ * radius_ +
                             2.0 * std::fabs(x0_) * std::sqrt(radius_ * radius_ + y0_ * y0_) +
                             x0_ * x0_ + y0_ * y0_);
        case Kind::UnitSphere:
            return 1.0;
        case Kind::StarlikeCompletion: {
            double worst = 0.0;
            for (const auto& p : polygon_)
                worst = std::max(worst, std::sqrt(p.x * p.x + p.y * p.y));
            return worst;
        }
    }
    return 0.0;
}

bool CompactDomain::flagged_geometry() const {
    return kind_ == Kind::CassiniCell && y0_ >= radius_;
}

CompactDomain::PlanarBox CompactDomain::planar_box() const {
    switch (kind_) {
        case Kind::Ball:
            return {x0_ - radius_, x0_ + radius_, radius_};
        case Kind::CassiniCell: {
            const double a = std::sqrt(radius_ * radius_ + y0_ * y0_);
            return {x0_ - a, x0_ + a, a};
        }
        case Kind::UnitSphere:
            return {-1.0, 1.0, 1.0};
        case Kind::StarlikeCompletion:
            return {poly_xmin_, poly_xmax_, poly_ymax_};
    }
    return {};
}

std::string CompactDomain::describe() const {
    char buf[128];
    switch (kind_) {
        case Kind::Ball:
            std::snprintf(buf, sizeof buf, "ball[x0=%g;R=%g]", x0_, radius_);
            return buf;
        case Kind::CassiniCell:
            std::snprintf(buf, sizeof buf, "cassini[x0=%g;y0=%g;R=%g]", x0_, y0_, radius_);
            return buf;
        case Kind::UnitSphere:
            return "sphere";
        case Kind::StarlikeCompletion:
            return "starlike-completion";
    }
    return "?";
}

namespace {

// Low-discrepancy set of slice units: Fibonacci lattice on the sphere of
// purely imaginary directions, with the canonical unit first.
std::vector<ImagUnit> unit_lattice(int count) {
    std::vector<ImagUnit> units;
    units.reserve(count);
    units.push_back(canonical_unit());
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int s = 1; s < count; ++s) {
        const double z = 1.0 - 2.0 * (s + 0.5) / count;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.0 * kPi * s / golden;
        units.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
    }
    return units;
}

void push_if_member(const CompactDomain& d, std::vector<Quaternion>& out, const Quaternion& q) {
    if (d.contains(q)) out.push_back(q);
}

// Extremal and real-axis seed points, nudged inward until membership holds
// in floating point.
void seed_points(const CompactDomain& d, std::vector<Quaternion>& out) {
    auto nudge_real = [&](double x, double center) {
        for (double f = 0.0; f <= 1e-9; f = (f == 0.0 ? 1e-15 : f * 8.0)) {
            const double xx = center + (x - center) * (1.0 - f);
            if (d.contains(Quaternion(xx))) {
                out.push_back(Quaternion(xx));
                return;
            }
        }
    };
    switch (d.kind()) {
        case CompactDomain::Kind::Ball:
            nudge_real(d.x0() + d.radius(), d.x0());
            nudge_real(d.x0() - d.radius(), d.x0());
            out.push_back(Quaternion(d.x0()));
            break;
        case CompactDomain::Kind::CassiniCell: {
            const double R = d.radius(), y0 = d.y0();
            if (R > y0) {
                const double reach = std::sqrt(R * R - y0 * y0);
                nudge_real(d.x0() + reach, d.x0());
                nudge_real(d.x0() - reach, d.x0());
                out.push_back(Quaternion(d.x0()));
            }
            // the core sphere x0 + S y0 is always interior
            push_if_member(d, out, Quaternion(d.x0()) + quat_i * y0);
            push_if_member(d, out, Quaternion(d.x0()) - quat_i * y0);
            break;
        }
        case CompactDomain::Kind::UnitSphere:
            out.push_back(Quaternion(1.0));
            out.push_back(Quaternion(-1.0));
            break;
        case CompactDomain::Kind::StarlikeCompletion:
            push_if_member(d, out, Quaternion{});
            break;
    }
}

}  // namespace

SampleGrid sample(const CompactDomain& d, int count, std::uint64_t seed) {
    if (count <= 0) throw std::invalid_argument("sample: count must be positive");

    SampleGrid grid;
    grid.requested = count;
    grid.seed = seed;
    grid.domain = d.describe();
    seed_points(d, grid.points);

    const int units_count = std::max(8, count / 32);
    const auto units = unit_lattice(units_count);

    if (d.kind() == CompactDomain::Kind::UnitSphere) {
        // Stratified angles, unit pairing; no rejection needed.
        const int pairs = std::max(1, (count - static_cast<int>(grid.points.size()) + 1) / 2);
        std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 1;
        for (int s = 0; s < pairs; ++s) {
            const double jitter = unit_double(splitmix64(state));
            const double theta = kPi * (s + jitter) / pairs;
            const ImagUnit& I = units[s % units.size()];
            const Quaternion q = exp_unit(I, theta);
            grid.points.push_back(q);
            grid.points.push_back(q.conj());
        }
        return grid;
    }

    // Planar bounding box of the cross-section.
    const auto box = d.planar_box();
    const double bx0 = box.xmin, bx1 = box.xmax, by1 = box.ymax;

    const int want_pairs = std::max(1, (count - static_cast<int>(grid.points.size()) + 1) / 2);
    const int cells = std::max(2, static_cast<int>(std::ceil(std::sqrt(double(want_pairs)))));
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 0x51ed2701;
    int produced = 0;
    int unit_cursor = 0;
    for (int round = 0; round < 256 && produced < want_pairs; ++round) {
        for (int cy = 0; cy < cells && produced < want_pairs; ++cy) {
            for (int cx = 0; cx < cells && produced < want_pairs; ++cx) {
                const double jx = unit_double(splitmix64(state));
                const double jy = unit_double(splitmix64(state));
                const double x = bx0 + (bx1 - bx0) * (cx + jx) / cells;
                const double y = by1 * (cy + jy) / cells;
                if (!d.contains_planar(x, y)) continue;
                const ImagUnit& I = units[unit_cursor++ % units.size()];
                const Quaternion q = Quaternion(x) + I.quat() * y;
                if (!d.contains(q)) continue;  // guard the (x,y) -> q roundtrip
                grid.points.push_back(q);
                grid.points.push_back(q.conj());
                ++produced;
            }
        }
    }
    if (produced == 0)
        throw std::runtime_error("sample: could not hit the domain cross-section");
    return grid;
}

StarlikeReport starlike_check(const CompactDomain& d, double center,
                              const std::vector<Quaternion>& samples, int t_samples) {
    StarlikeReport report;
    const Quaternion c(center);
    for (const Quaternion& q : samples) {
        for (int s = 0; s <= t_samples; ++s) {
            const double t = static_cast<double>(s) / t_samples;
            const Quaternion p = q * t + c * (1.0 - t);
            if (!d.contains(p)) {
                report.starlike = false;
                report.witness = q;
                report.t_fail = t;
                return report;
            }
        }
    }
    report.starlike = true;
    return report;
}

}  // namespace slice
