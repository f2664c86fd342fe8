#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sliceapprox/quaternion.hpp"
#include "test_helpers.hpp"

using namespace slice;
using slice::testing::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;
}  // namespace

TEST_CASE("hamilton product follows the multiplication table") {
    CHECK(quat_i * quat_j == quat_k);
    CHECK(quat_j * quat_k == quat_i);
    CHECK(quat_k * quat_i == quat_j);
    CHECK(quat_j * quat_i == -quat_k);
    CHECK(quat_i * quat_i == -quat_one);

    const Quaternion q{0.3, -1.2, 0.7, 2.0};
    CHECK(q * quat_one == q);
    CHECK(quat_one * q == q);

    // (1+i)(1+j) = 1 + i + j + k
    const Quaternion lhs = (quat_one + quat_i) * (quat_one + quat_j);
    CHECK(lhs == Quaternion{1, 1, 1, 1});
}

TEST_CASE("conj, norm, inverse") {
    CHECK(quat_i.conj() == -quat_i);
    CHECK(Quaternion{1, 1, 1, 1}.norm() == doctest::Approx(2.0).epsilon(1e-15));

    const Quaternion two_i = quat_i * 2.0;
    const Quaternion inv = two_i.inverse();
    CHECK((inv - (-quat_i * 0.5)).norm() < 1e-16);

    CHECK_THROWS_AS(Quaternion{}.inverse(), std::domain_error);
}

TEST_CASE("slice decomposition") {
    const SliceCoords a = slice_decompose(Quaternion{1, 2, 0, 0});
    CHECK(a.x == 1.0);
    CHECK(a.y == 2.0);
    CHECK(a.axis.quat() == quat_i);

    const SliceCoords real = slice_decompose(Quaternion(3.0));
    CHECK(real.x == 3.0);
    CHECK(real.y == 0.0);
    CHECK(real.axis.quat() == quat_i);  // canonical default

    const SliceCoords jk = slice_decompose(quat_j + quat_k);
    CHECK(jk.x == 0.0);
    CHECK(jk.y == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK((jk.axis.quat() - (quat_j + quat_k) * (1.0 / std::sqrt(2.0))).norm() < 1e-15);
}

TEST_CASE("exp_unit basics") {
    CHECK((exp_unit(ImagUnit(1, 0, 0), kPi) - Quaternion(-1.0)).norm() < 2e-16);
    CHECK(exp_unit(ImagUnit(0, 0, 1), 0.0) == quat_one);
    CHECK((exp_unit(ImagUnit(0, 1, 0), kPi / 2) - quat_j).norm() < 2e-16);
}

TEST_CASE("norm is multiplicative (property)") {
    Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const Quaternion p = rng.quaternion(10.0);
        const Quaternion q = rng.quaternion(10.0);
        const double lhs = (p * q).norm();
        const double rhs = p.norm() * q.norm();
        CHECK(std::fabs(lhs - rhs) <= 8.0 * kEps * std::max(lhs, rhs));
    }
}

TEST_CASE("inverse is a two-sided inverse (property)") {
    Rng rng(43);
    for (int trial = 0; trial < 2000; ++trial) {
        const Quaternion q = rng.nonzero_quaternion(5.0);
        CHECK((q * q.inverse() - quat_one).norm() <= 1e-14);
        CHECK((q.inverse() * q - quat_one).norm() <= 1e-14);
    }
}

TEST_CASE("q conj(q) is the real number |q|^2 (property)") {
    Rng rng(46);
    for (int trial = 0; trial < 2000; ++trial) {
        const Quaternion q = rng.quaternion(4.0);
        const Quaternion prod = q * q.conj();
        const double scale = 8.0 * kEps * std::max(1.0, q.norm_sq());
        CHECK(std::fabs(prod.x) <= scale);
        CHECK(std::fabs(prod.y) <= scale);
        CHECK(std::fabs(prod.z) <= scale);
        CHECK(std::fabs(prod.w - q.norm_sq()) <= scale);
    }
}

TEST_CASE("exp_unit is a homomorphism on each slice (property)") {
    Rng rng(44);
    for (int trial = 0; trial < 2000; ++trial) {
        const ImagUnit I = rng.imag_unit();
        const double u = rng.uniform(-kPi, kPi);
        const double v = rng.uniform(-kPi, kPi);
        const Quaternion prod = exp_unit(I, u) * exp_unit(I, v);
        CHECK((prod - exp_unit(I, u + v)).norm() <= 1e-14);
        CHECK(std::fabs(exp_unit(I, u).norm() - 1.0) <= 4.0 * kEps);
    }
}

TEST_CASE("decomposition reassembles the input (property)") {
    Rng rng(45);
    for (int trial = 0; trial < 2000; ++trial) {
        const Quaternion q = rng.nonzero_quaternion(3.0);
        const Quaternion back = slice_decompose(q).reassemble();
        CHECK((back - q).norm() <= 4.0 * kEps * std::max(1.0, q.norm()));
    }
}
