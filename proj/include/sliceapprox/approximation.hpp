#pragma once

// The convolution operators built on the kernels: pointwise quadrature form
// (the oracle path) and closed polynomial form via Fourier multipliers (the
// product path).  The two coincide on series inputs and the equivalence is a
// permanent regression test.

#include <optional>
#include <string>

#include "sliceapprox/kernels.hpp"
#include "sliceapprox/quaternion.hpp"
#include "sliceapprox/slice_function.hpp"

namespace slice {

struct ApproximationReport {
    std::string op;        // operator / kernel id
    int degree = 0;        // n
    std::string domain;
    std::string function;
    double sup_error = 0.0;
    double bound = 0.0;    // 0 when no certified bound is available
    double ratio = 0.0;    // sup_error / bound when bound > 0
    int samples = 0;
    double seconds = 0.0;
    bool pass = false;
};

// (1/2pi) int f(q e^{I_q u}) K(u) du by periodic quadrature on m nodes
// (m = 0 picks the kernel default).  At q = 0 this is f(0) exactly.  Real q
// use the canonical slice unless real_axis_unit overrides it; the result
// does not depend on that choice for intrinsic f.
Quaternion convolve_pointwise(const SliceFunction& f, const Quaternion& q, const Kernel& k,
                              int m = 0, const std::optional<ImagUnit>& real_axis_unit = {});

// Coefficient c_l multiplied by the kernel's rho_l; powers beyond the table
// are dropped.  This is the closed form of the induced operator for every
// kernel family.
RightPolynomial apply_multipliers(const std::vector<Quaternion>& coefficients, const Kernel& k);

// The degree-n polynomial with coefficients c_l (n!)^2/((n-l)!(n+l)!).
RightPolynomial dvp_operator_closed(const PowerSeries& f, int n);
RightPolynomial dvp_operator_closed(const RightPolynomial& f, int n);

// Expand the Cassini series to a right polynomial, apply the de la Vallee
// Poussin multipliers, and truncate past degree n.  Agrees with the
// pointwise convolution everywhere.
RightPolynomial cassini_operator_closed(const CassiniSeries& s, int n);

// -(1/2pi) int K_{n,r}(u) sum_{k=1}^{p+1} C(p+1,k) (-1)^k f(q e^{I_q k u}) du
// with r the smallest integer >= (p+2)/2.  Reproduces constants exactly.
Quaternion generalized_jackson_operator(const SliceFunction& f, const Quaternion& q, int n, int p,
                                        int m = 0,
                                        const std::optional<ImagUnit>& real_axis_unit = {});

// The multiplier the generalized Jackson operator applies to the degree-l
// coefficient: -sum_k C(p+1,k) (-1)^k rho_{k l}.
double generalized_jackson_multiplier(const Kernel& gen_jackson_kernel, int p, int l);

// Delayed means 2 L_{2n} - L_n: identity on polynomials of degree <= n.
RightPolynomial delayed_mean_operator(const RightPolynomial& f, int n);
RightPolynomial delayed_mean_operator(const PowerSeries& f, int n);
Quaternion delayed_mean_operator(const SliceFunction& f, const Quaternion& q, int n, int m = 0);

// Degree-n Laurent approximant of a continuous slice function on the unit
// sphere: delayed-mean trigonometric approximation of (alpha, beta) on a
// slice, reassembled through cos(k t) = (q^k + q^{-k})/2 and
// I sin(k t) = (q^k - q^{-k})/2.  Exact on Laurent polynomials of degree
// <= n once m resolves the input band.
LaurentPolynomial laurent_approx_on_sphere(const SliceFunction& f, int n, int m = 0);

}  // namespace slice
