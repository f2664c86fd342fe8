#pragma once

// Sup-norm error measurement, modulus-of-continuity machinery and the
// explicit error bounds for the ball and Cassini-cell operators.
//
// Certification uses analytic Lipschitz data only: a sampled modulus is a
// lower bound of the true omega_1, so "error <= 3(R+1) omega_hat" is not
// what the theorems assert.  Sampled moduli stay diagnostic.

#include <cstdint>
#include <variant>
#include <vector>

#include "sliceapprox/approximation.hpp"
#include "sliceapprox/geometry.hpp"
#include "sliceapprox/slice_function.hpp"

namespace slice {

// omega_1(f; delta) <= lipschitz * delta^order (order 1 everywhere here).
struct AnalyticModulus {
    double lipschitz = 0.0;
};

// Lower bound of omega_1 measured over sampled pairs; diagnostics only.
struct SampledModulus {
    std::vector<Quaternion> points;
    int pair_budget = 200000;
    std::uint64_t seed = 0;
};

using ModulusSpec = std::variant<AnalyticModulus, SampledModulus>;

double sup_error(const SliceFunction& f, const SliceFunction& approx,
                 const std::vector<Quaternion>& grid);

double modulus_estimate(const SliceFunction& f, double delta, const ModulusSpec& spec);

// Sampled p-th order modulus along slice circles: the sup over sampled base
// points and angular steps h <= delta of the p-th forward difference
// sum_s (-1)^{p-s} C(p,s) f(q e^{I s h}).  Diagnostic only; no certified
// bounds are derived from it.
double modulus_p_estimate(const SliceFunction& f, int p, double delta,
                          const std::vector<Quaternion>& points, int step_count = 8);

// 3 (R + 1) omega_1(f; 1/sqrt(n)) with the analytic modulus; a sampled-only
// modulus throws (only a non-certifying diagnostic would be available).
double dvp_bound(double R, const ModulusSpec& modulus, int n);

struct CassiniBound {
    double stated = 0.0;   // 3 (R + 1) omega_1
    double proof = 0.0;    // 3 (M_{R,q0} + 1) omega_1
    double m_value = 0.0;  // M_{R,q0}
};

// The theorem's statement writes the (R+1) constant while its derivation
// yields (M_{R,q0}+1); both are reported and only the proof form certifies.
CassiniBound cassini_bound(double x0, double y0, double R, const ModulusSpec& modulus, int n);

// M_{R,q0} = sqrt(R^2 + 2|x0| sqrt(R^2 + y0^2) + x0^2 + y0^2).
double cassini_norm_bound(double x0, double y0, double R);

// Certified Lipschitz constant of a finite Cassini series over its cell,
// from |B(q)| <= R^2, |q - x0| <= sqrt(R^2 + y0^2) and |q| <= M_{R,q0}.
double cassini_lipschitz_bound(const CassiniSeries& s, double R);

// Upper bound of E_n(f) by the sup error of the delayed-mean approximant of
// degree n; requires a polynomial or power-series presentation.
double best_approx_estimate(const SliceFunction& f, int n, const std::vector<Quaternion>& grid);

// Measures sup error of the approximant against f over the grid and fills a
// report; pass means sup_error <= bound.
ApproximationReport verify_bound(const SliceFunction& f, const SliceFunction& approx,
                                 const CompactDomain& domain, const ModulusSpec& modulus, int n,
                                 const std::vector<Quaternion>& grid, const std::string& op,
                                 const std::string& function_name);

}  // namespace slice
