#pragma once

// Representations of continuous slice functions f(x + I y) = alpha(x,y) + I beta(x,y)
// with alpha even and beta odd in y: polynomials and power series with right
// coefficients, Cassini-cell series, Laurent polynomials, and user closures.
//
// All series evaluate with powers on the left and coefficients on the right,
// sum q^k c_k; this is the only form compatible with slice regularity.

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sliceapprox/quaternion.hpp"

namespace slice {

// sum_{k=0}^{N} q^k c_k
class RightPolynomial {
  public:
    RightPolynomial() = default;
    explicit RightPolynomial(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<Quaternion>& coefficients() const { return coeffs_; }
    std::vector<Quaternion>& coefficients() { return coeffs_; }

    // Largest k with c_k != 0; -1 for the zero polynomial.
    int degree() const;

    Quaternion operator()(const Quaternion& q) const;

    RightPolynomial operator+(const RightPolynomial& o) const;
    RightPolynomial operator-(const RightPolynomial& o) const;
    // Right scalar: (sum q^k c_k) * a.
    RightPolynomial operator*(const Quaternion& a) const;

  private:
    std::vector<Quaternion> coeffs_;
};

// A stored, finitely truncated power series with its radius of validity.
// Evaluation outside the closed ball of that radius is a domain error.
class PowerSeries {
  public:
    PowerSeries() = default;
    PowerSeries(std::vector<Quaternion> coeffs, double radius)
        : coeffs_(std::move(coeffs)), radius_(radius) {}

    const std::vector<Quaternion>& coefficients() const { return coeffs_; }
    double radius() const { return radius_; }

    Quaternion operator()(const Quaternion& q) const;

  private:
    std::vector<Quaternion> coeffs_;
    double radius_ = 1.0;
};

// sum_{k=1}^{K} [(q - x0)^2 + y0^2]^k (c_{2k} + q c_{2k+1});
// pairs_[k-1] = (c_{2k}, c_{2k+1}).  The pair index starts at one.
class CassiniSeries {
  public:
    CassiniSeries() = default;
    CassiniSeries(double x0, double y0, std::vector<std::pair<Quaternion, Quaternion>> pairs)
        : x0_(x0), y0_(y0), pairs_(std::move(pairs)) {}

    double x0() const { return x0_; }
    double y0() const { return y0_; }
    const std::vector<std::pair<Quaternion, Quaternion>>& pairs() const { return pairs_; }

    Quaternion operator()(const Quaternion& q) const;

  private:
    double x0_ = 0.0;
    double y0_ = 1.0;
    std::vector<std::pair<Quaternion, Quaternion>> pairs_;
};

// sum_{k=-M}^{N} q^k a_k; requires q != 0 when M >= 1.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    // negative[k-1] is the coefficient of q^{-k}; nonnegative[k] of q^k.
    LaurentPolynomial(std::vector<Quaternion> negative, std::vector<Quaternion> nonnegative)
        : neg_(std::move(negative)), nonneg_(std::move(nonnegative)) {}

    const std::vector<Quaternion>& negative_coefficients() const { return neg_; }
    const std::vector<Quaternion>& nonnegative_coefficients() const { return nonneg_; }

    Quaternion operator()(const Quaternion& q) const;

  private:
    std::vector<Quaternion> neg_;
    std::vector<Quaternion> nonneg_;
};

// User closure over slice coordinates: (x, y) -> (alpha, beta).  Callers must
// supply beta(x, 0) = 0; the even/odd symmetry is enforced by evaluating at
// y = |y| and flipping the sign of beta.
struct AlphaBetaFunction {
    std::function<std::pair<Quaternion, Quaternion>(double, double)> fn;
};

// A continuous slice function in any of the supported presentations.
class SliceFunction {
  public:
    using Form = std::variant<RightPolynomial, PowerSeries, CassiniSeries, LaurentPolynomial,
                              AlphaBetaFunction>;

    SliceFunction(RightPolynomial p) : form_(std::move(p)) {}
    SliceFunction(PowerSeries s) : form_(std::move(s)) {}
    SliceFunction(CassiniSeries s) : form_(std::move(s)) {}
    SliceFunction(LaurentPolynomial l) : form_(std::move(l)) {}
    SliceFunction(AlphaBetaFunction f) : form_(std::move(f)) {}

    Quaternion operator()(const Quaternion& q) const;

    // (alpha, beta) at slice coordinates (x, y); beta odd, alpha even in y.
    std::pair<Quaternion, Quaternion> alpha_beta(double x, double y) const;

    const Form& form() const { return form_; }
    const RightPolynomial* as_polynomial() const { return std::get_if<RightPolynomial>(&form_); }
    const PowerSeries* as_power_series() const { return std::get_if<PowerSeries>(&form_); }
    const CassiniSeries* as_cassini() const { return std::get_if<CassiniSeries>(&form_); }
    const LaurentPolynomial* as_laurent() const { return std::get_if<LaurentPolynomial>(&form_); }

  private:
    Form form_;
};

// Theorem-2.7 reconstruction: the value at x + I y from the two values on
// the slice C_J,
//   1/2 [f(x+Jy) + f(x-Jy)] + I 1/2 [J (f(x-Jy) - f(x+Jy))].
Quaternion representation_formula(const Quaternion& f_plus, const Quaternion& f_minus,
                                  const ImagUnit& J, const ImagUnit& I);

// Extension of a function on one slice plane C_J to a slice function on the
// axially symmetric completion.  g(x, y) is the value at the point x + J y.
SliceFunction extend_from_slice(std::function<Quaternion(double, double)> g, const ImagUnit& J);

struct IntrinsicReport {
    bool intrinsic = false;
    double max_defect = 0.0;
    Quaternion worst_point{};
};

// Sampled check of f(conj q) = conj(f(q)); not a proof.
IntrinsicReport is_intrinsic(const SliceFunction& f, const std::vector<Quaternion>& samples,
                             double tolerance = 1e-12);

// Binomial expansion of a Cassini series into an ordinary right polynomial
// of degree 2K + 1; evaluation agrees everywhere.
RightPolynomial cassini_to_polynomial(const CassiniSeries& s);

}  // namespace slice
