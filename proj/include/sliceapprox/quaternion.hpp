#pragma once

// Quaternion arithmetic and the slice decomposition q = x + I*y.
// Everything downstream (series evaluation, kernel convolution, error
// measurement) reduces to the handful of operations defined here.

#include <cmath>
#include <iosfwd>
#include <stdexcept>

namespace slice {

struct Quaternion {
    double w = 0.0;  // real part
    double x = 0.0;  // i component
    double y = 0.0;  // j component
    double z = 0.0;  // k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    // Real numbers embed on the scalar axis.
    constexpr Quaternion(double real) : w(real) {}

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    // Hamilton product: ij = -ji = k, jk = -kj = i, ki = -ik = j.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    constexpr Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    constexpr Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    constexpr Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    // q^{-1} = conj(q) / |q|^2, only for q != 0.
    Quaternion inverse() const {
        const double n2 = norm_sq();
        if (n2 == 0.0) throw std::domain_error("Quaternion::inverse: zero has no inverse");
        return conj() / n2;
    }

    constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }
    double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }
constexpr Quaternion operator+(double s, const Quaternion& q) { return Quaternion(s) + q; }
constexpr Quaternion operator-(double s, const Quaternion& q) { return Quaternion(s) - q; }

inline constexpr Quaternion quat_one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion quat_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion quat_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion quat_k{0.0, 0.0, 0.0, 1.0};

// A point of the unit sphere of purely imaginary quaternions.  Every value
// of this type satisfies Re I = 0, |I| = 1, I^2 = -1.
class ImagUnit {
  public:
    // Normalizes the imaginary part of v; the real part must vanish.
    explicit ImagUnit(const Quaternion& v) {
        if (v.w != 0.0)
            throw std::invalid_argument("ImagUnit: real part must be zero");
        const double n = v.imag_norm();
        if (!(n > 0.0))
            throw std::invalid_argument("ImagUnit: zero imaginary part");
        value_ = {0.0, v.x / n, v.y / n, v.z / n};
    }
    ImagUnit(double x, double y, double z) : ImagUnit(Quaternion{0.0, x, y, z}) {}

    const Quaternion& quat() const { return value_; }

    bool operator==(const ImagUnit&) const = default;

  private:
    Quaternion value_;
};

// Canonical unit used when a real point needs an arbitrary slice: fixed to i
// so results are deterministic; operators on intrinsic functions do not
// depend on the choice (covered by tests).
inline ImagUnit canonical_unit() { return ImagUnit(1.0, 0.0, 0.0); }

// Slice coordinates of q = x + I*y with y >= 0.  For real q the unit is the
// canonical default and y = 0.
struct SliceCoords {
    double x = 0.0;
    double y = 0.0;
    ImagUnit axis;

    Quaternion reassemble() const { return Quaternion(x) + axis.quat() * y; }
};

// Decomposes q into (x, y, I_q).  Real inputs get unit_for_real (default i).
inline SliceCoords slice_decompose(const Quaternion& q) {
    const double n = q.imag_norm();
    if (n == 0.0) return SliceCoords{q.w, 0.0, ImagUnit(1.0, 0.0, 0.0)};
    return SliceCoords{q.w, n, ImagUnit(q.x, q.y, q.z)};
}

inline SliceCoords slice_decompose(const Quaternion& q, const ImagUnit& unit_for_real) {
    const double n = q.imag_norm();
    if (n == 0.0) return SliceCoords{q.w, 0.0, unit_for_real};
    return SliceCoords{q.w, n, ImagUnit(q.x, q.y, q.z)};
}

// cos(u) + I*sin(u): the point of the unit circle of C_I at angle u.
inline Quaternion exp_unit(const ImagUnit& axis, double u) {
    return Quaternion(std::cos(u)) + axis.quat() * std::sin(u);
}

// Integer power by repeated Hamilton multiplication.  Exponents here are
// small (series degrees), so the linear scheme is fine.
inline Quaternion pow_int(const Quaternion& q, int k) {
    if (k < 0) return pow_int(q.inverse(), -k);
    Quaternion acc = quat_one;
    for (int s = 0; s < k; ++s) acc = acc * q;
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace slice
