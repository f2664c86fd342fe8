#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sliceapprox/approximation.hpp"
#include "test_helpers.hpp"

using namespace slice;
using slice::testing::Rng;
using slice::testing::random_ball_points;
using slice::testing::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;

PowerSeries random_series(Rng& rng, int degree, double radius) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& q : c) {
        q = rng.quaternion(0.5);
        if (q.norm() > 1.0) q = q * (1.0 / q.norm());
    }
    return PowerSeries(std::move(c), radius);
}
}  // namespace

TEST_CASE("pointwise convolution basics") {
    const SliceFunction one(RightPolynomial({quat_one}));
    const SliceFunction identity(RightPolynomial({Quaternion{}, quat_one}));

    Rng rng(90);
    for (const Kernel& k : {Kernel::dvp(3), Kernel::jackson(4), Kernel::fejer_delayed(2)}) {
        for (int s = 0; s < 20; ++s) {
            const Quaternion q = rng.quaternion(1.5);
            CHECK(rel_err(convolve_pointwise(one, q, k), quat_one) < 1e-13);
        }
    }

    // f(q) = q under DVP(1): multiplier 1/2
    for (int s = 0; s < 20; ++s) {
        const Quaternion q = rng.quaternion(2.0);
        CHECK(rel_err(convolve_pointwise(identity, q, Kernel::dvp(1)), q * 0.5) < 1e-13);
    }

    // the operator at the origin is exactly f(0)
    const SliceFunction f(RightPolynomial({Quaternion{0.25, 1, 2, 3}, quat_i, quat_j}));
    CHECK(convolve_pointwise(f, Quaternion{}, Kernel::dvp(5)) == f(Quaternion{}));
}

TEST_CASE("closed dvp operator on series") {
    // c0 = 1, c1 = i, n = 1: P = 1 + q (i/2)
    const RightPolynomial p = dvp_operator_closed(PowerSeries({quat_one, quat_i}, 2.0), 1);
    REQUIRE(p.coefficients().size() == 2);
    CHECK((p.coefficients()[0] - quat_one).norm() < 1e-16);
    CHECK((p.coefficients()[1] - quat_i * 0.5).norm() < 1e-16);

    // constants are reproduced
    const RightPolynomial c = dvp_operator_closed(PowerSeries({Quaternion{2, -1, 0, 3}}, 1.0), 7);
    CHECK((c.coefficients()[0] - Quaternion{2, -1, 0, 3}).norm() < 1e-16);

    // the degree-1 multiplier tends to one: n/(n+1)
    const Kernel k100 = Kernel::dvp(100);
    CHECK(k100.multiplier(1) == doctest::Approx(100.0 / 101.0).epsilon(1e-15));
}

TEST_CASE("closed form equals quadrature on random series (oracle)") {
    Rng rng(91);
    for (int trial = 0; trial < 4; ++trial) {
        const PowerSeries f = random_series(rng, 12, 1.0);
        const SliceFunction sf(f);
        for (int n : {1, 4, 9, 12}) {
            const SliceFunction closed(dvp_operator_closed(f, n));
            for (const Quaternion& q : random_ball_points(rng, 12, 0.9)) {
                const Quaternion oracle = convolve_pointwise(sf, q, Kernel::dvp(n));
                CHECK(rel_err(closed(q), oracle) < 1e-9);
            }
        }
    }
}

TEST_CASE("cassini closed operator") {
    SUBCASE("worked example: q^2 + 1 on the unit cell at n = 2") {
        const CassiniSeries s(0.0, 1.0, {{quat_one, Quaternion{}}});
        const RightPolynomial p = cassini_operator_closed(s, 2);
        REQUIRE(p.coefficients().size() == 3);
        CHECK((p.coefficients()[0] - quat_one).norm() < 1e-16);
        CHECK(p.coefficients()[1].norm() < 1e-16);
        CHECK((p.coefficients()[2] - Quaternion(1.0 / 6.0)).norm() < 1e-16);
    }

    SUBCASE("zero series maps to the zero polynomial") {
        const CassiniSeries s(1.0, 2.0, {{Quaternion{}, Quaternion{}}});
        CHECK(cassini_operator_closed(s, 3).degree() == -1);
    }

    SUBCASE("agrees with the quadrature oracle on cell points") {
        Rng rng(92);
        const CassiniSeries s(1.0, 1.0,
                              {{rng.quaternion(0.5), rng.quaternion(0.5)},
                               {rng.quaternion(0.25), rng.quaternion(0.25)}});
        const SliceFunction sf(s);
        for (int n : {2, 5, 9}) {
            const SliceFunction closed(cassini_operator_closed(s, n));
            int tested = 0;
            while (tested < 100) {
                const Quaternion q = rng.quaternion(2.5);
                ++tested;
                const Quaternion oracle = convolve_pointwise(sf, q, Kernel::dvp(n));
                CHECK(rel_err(closed(q), oracle) < 1e-10);
            }
        }
    }
}

TEST_CASE("generalized jackson operator") {
    Rng rng(93);

    SUBCASE("reproduces constants for p = 0..3") {
        const Quaternion c{0.8, -0.1, 0.4, 2.0};
        const SliceFunction f(RightPolynomial({c}));
        for (int p = 0; p <= 3; ++p) {
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.quaternion(1.0);
                CHECK((generalized_jackson_operator(f, q, 8, p) - c).norm() < 1e-12);
            }
        }
    }

    SUBCASE("p = 0 is the plain normalized-kernel convolution") {
        const PowerSeries f = random_series(rng, 5, 4.0);
        const SliceFunction sf(f);
        const Kernel k = Kernel::gen_jackson(6, 1);
        for (int s = 0; s < 20; ++s) {
            const Quaternion q = rng.quaternion(1.5);
            CHECK(rel_err(generalized_jackson_operator(sf, q, 6, 0),
                          convolve_pointwise(sf, q, k)) < 1e-12);
        }
    }

    SUBCASE("induced degree-1 multiplier at p = 1 is 1 + O(n^-2)") {
        // The alternating combination overshoots one slightly; the frozen
        // value below comes from raw quadrature of the kernel harmonics
        // (2 rho_1 - rho_2 at n = 8, r = 2).
        const int p = 1, n = 8;
        const int r = (p + 3) / 2;
        const double mu = generalized_jackson_multiplier(Kernel::gen_jackson(n, r), p, 1);
        CHECK(mu == doctest::Approx(1.037790697674).epsilon(1e-9));
        for (int bigger : {16, 32, 64}) {
            const double mu_n =
                generalized_jackson_multiplier(Kernel::gen_jackson(bigger, r), p, 1);
            CHECK(std::fabs(1.0 - mu_n) < 3.0 / (bigger * bigger));
        }

        // and it is what the operator actually applies to f(q) = q
        const SliceFunction identity(RightPolynomial({Quaternion{}, quat_one}));
        const Quaternion q{0.3, 0.5, -0.2, 0.1};
        CHECK(rel_err(generalized_jackson_operator(identity, q, n, p), q * mu) < 1e-11);
    }
}

TEST_CASE("delayed means reproduce low-degree polynomials exactly") {
    // f = q^3 + q i at n = 3 is reproduced exactly
    const RightPolynomial f({Quaternion{}, quat_i, Quaternion{}, quat_one});
    const RightPolynomial out = delayed_mean_operator(f, 3);
    REQUIRE(out.coefficients().size() == 4);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK((out.coefficients()[k] - f.coefficients()[k]).norm() == 0.0);

    // constants
    const RightPolynomial c = delayed_mean_operator(RightPolynomial({quat_k}), 4);
    CHECK((c.coefficients()[0] - quat_k).norm() == 0.0);

    // q^{2n} is annihilated: multiplier at j = 2n vanishes
    std::vector<Quaternion> high(2 * 5 + 1);
    high.back() = quat_one;
    const RightPolynomial killed = delayed_mean_operator(RightPolynomial(high), 5);
    CHECK(killed.degree() == -1);
}

TEST_CASE("operators are right-linear (property)") {
    Rng rng(94);
    const PowerSeries f = random_series(rng, 6, 1.0);
    const PowerSeries g = random_series(rng, 6, 1.0);
    const Quaternion lam = rng.quaternion(), mu = rng.quaternion();

    // combine coefficientwise: h = f lam + g mu
    std::vector<Quaternion> hc(7);
    for (int k = 0; k <= 6; ++k)
        hc[k] = f.coefficients()[k] * lam + g.coefficients()[k] * mu;
    const SliceFunction h(PowerSeries(hc, 1.0));

    for (const Kernel& k : {Kernel::dvp(4), Kernel::fejer_delayed(3)}) {
        for (int s = 0; s < 25; ++s) {
            const Quaternion q = rng.quaternion(0.45);
            const Quaternion lhs = convolve_pointwise(h, q, k);
            const Quaternion rhs = convolve_pointwise(SliceFunction(f), q, k) * lam +
                                   convolve_pointwise(SliceFunction(g), q, k) * mu;
            CHECK((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
        }
    }
}

TEST_CASE("operator value depends only on the slice circle through q (property)") {
    Rng rng(95);
    const PowerSeries base = random_series(rng, 5, 4.0);
    const SliceFunction f(base);

    for (int s = 0; s < 10; ++s) {
        const Quaternion q0 = rng.nonzero_quaternion(1.5);
        const double r0 = q0.norm();

        // same function on the circle |q| = r0, garbage elsewhere
        AlphaBetaFunction patched;
        patched.fn = [&base, r0](double x, double y) {
            const double r = std::hypot(x, y);
            Quaternion bump{};
            if (std::fabs(r - r0) > 1e-8) bump = Quaternion(1000.0);
            const Quaternion plus = base(Quaternion(x) + quat_i * y);
            const Quaternion minus = base(Quaternion(x) - quat_i * y);
            return std::make_pair((plus + minus) * 0.5 + bump,
                                  quat_i * (minus - plus) * 0.5);
        };
        const SliceFunction g{std::move(patched)};

        const Kernel k = Kernel::dvp(4);
        const Quaternion want = convolve_pointwise(f, q0, k);
        const Quaternion got = convolve_pointwise(g, q0, k);
        CHECK((want - got).norm() < 1e-11 * (1.0 + want.norm()));
    }
}

TEST_CASE("real points are independent of the slice choice for intrinsic f (property)") {
    const PowerSeries f({Quaternion(0.5), Quaternion(-1.0), Quaternion(0.25)}, 3.0);
    const SliceFunction sf(f);
    for (double x : {0.25, -1.2, 2.0}) {
        const Quaternion q(x);
        const Quaternion with_i = convolve_pointwise(sf, q, Kernel::dvp(6), 0, ImagUnit(1, 0, 0));
        const Quaternion with_j = convolve_pointwise(sf, q, Kernel::dvp(6), 0, ImagUnit(0, 1, 0));
        const Quaternion with_k = convolve_pointwise(sf, q, Kernel::dvp(6), 0, ImagUnit(0, 0, 1));
        CHECK((with_i - with_j).norm() < 1e-12);
        CHECK((with_i - with_k).norm() < 1e-12);
    }
}

TEST_CASE("laurent approximation on the sphere") {
    const SliceFunction identity(RightPolynomial({Quaternion{}, quat_one}));
    Rng rng(96);
    std::vector<Quaternion> sphere_pts;
    for (int s = 0; s < 200; ++s) {
        const double theta = rng.uniform(-kPi, kPi);
        sphere_pts.push_back(exp_unit(rng.imag_unit(), theta));
    }

    SUBCASE("f(q) = q is reproduced exactly for n >= 1") {
        const LaurentPolynomial l = laurent_approx_on_sphere(identity, 1);
        for (const auto& q : sphere_pts) CHECK((l(q) - q).norm() < 1e-12);
    }

    SUBCASE("constants are reproduced") {
        const Quaternion c{0.1, -0.7, 0.3, 0.9};
        const LaurentPolynomial l =
            laurent_approx_on_sphere(SliceFunction(RightPolynomial({c})), 2);
        for (const auto& q : sphere_pts) CHECK((l(q) - c).norm() < 1e-12);
    }

    SUBCASE("q + q^{-1} is a pure cosine mode and comes back exactly") {
        const LaurentPolynomial in({quat_one}, {Quaternion{}, quat_one});
        const LaurentPolynomial l = laurent_approx_on_sphere(SliceFunction(in), 1);
        for (const auto& q : sphere_pts) CHECK((l(q) - in(q)).norm() < 1e-12);
    }

    SUBCASE("quaternion coefficients survive the round trip: q^2 i") {
        const LaurentPolynomial in({}, {Quaternion{}, Quaternion{}, quat_i});
        const LaurentPolynomial l = laurent_approx_on_sphere(SliceFunction(in), 2);
        for (const auto& q : sphere_pts) CHECK((l(q) - in(q)).norm() < 1e-12);
    }
}
