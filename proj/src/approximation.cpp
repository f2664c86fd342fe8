#include "sliceapprox/approximation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace slice {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
    double b = 1.0;
    for (int s = 0; s < k; ++s) b = b * (n - s) / (s + 1);
    return b;
}

ImagUnit slice_axis(const Quaternion& q, const std::optional<ImagUnit>& real_axis_unit) {
    if (q.imag_norm() == 0.0) return real_axis_unit.value_or(canonical_unit());
    return slice_decompose(q).axis;
}

}  // namespace

Quaternion convolve_pointwise(const SliceFunction& f, const Quaternion& q, const Kernel& k,
                              int m, const std::optional<ImagUnit>& real_axis_unit) {
    if (q.norm_sq() == 0.0) return f(q);
    if (m <= 0) m = k.default_quadrature_nodes();
    const ImagUnit axis = slice_axis(q, real_axis_unit);
    Quaternion acc{};
    const double h = 2.0 * kPi / m;
    for (int s = 0; s < m; ++s) {
        const double u = -kPi + (s + 0.5) * h;
        acc += f(q * exp_unit(axis, u)) * k(u);
    }
    return acc / static_cast<double>(m);
}

RightPolynomial apply_multipliers(const std::vector<Quaternion>& coefficients, const Kernel& k) {
    const size_t cut = std::min(coefficients.size(), k.multipliers().size());
    std::vector<Quaternion> out(cut);
    for (size_t l = 0; l < cut; ++l) out[l] = coefficients[l] * k.multiplier(static_cast<int>(l));
    return RightPolynomial(std::move(out));
}

RightPolynomial dvp_operator_closed(const PowerSeries& f, int n) {
    return apply_multipliers(f.coefficients(), Kernel::dvp(n));
}

RightPolynomial dvp_operator_closed(const RightPolynomial& f, int n) {
    return apply_multipliers(f.coefficients(), Kernel::dvp(n));
}

RightPolynomial cassini_operator_closed(const CassiniSeries& s, int n) {
    return apply_multipliers(cassini_to_polynomial(s).coefficients(), Kernel::dvp(n));
}

double generalized_jackson_multiplier(const Kernel& k, int p, int l) {
    double mu = 0.0;
    for (int j = 1; j <= p + 1; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        mu += sign * binomial(p + 1, j) * k.multiplier(j * l);
    }
    return -mu;
}

Quaternion generalized_jackson_operator(const SliceFunction& f, const Quaternion& q, int n, int p,
                                        int m, const std::optional<ImagUnit>& real_axis_unit) {
    if (p < 0) throw std::invalid_argument("generalized_jackson_operator: p must be >= 0");
    const int r = (p + 3) / 2;  // smallest integer >= (p+2)/2
    const Kernel kernel = Kernel::gen_jackson(n, r);
    if (q.norm_sq() == 0.0) return f(q);
    if (m <= 0) m = kernel.default_quadrature_nodes();
    const ImagUnit axis = slice_axis(q, real_axis_unit);

    std::vector<double> weights(p + 2, 0.0);
    for (int j = 1; j <= p + 1; ++j)
        weights[j] = ((j % 2 == 0) ? 1.0 : -1.0) * binomial(p + 1, j);

    Quaternion acc{};
    const double h = 2.0 * kPi / m;
    for (int s = 0; s < m; ++s) {
        const double u = -kPi + (s + 0.5) * h;
        const double kv = kernel(u);
        Quaternion inner{};
        for (int j = 1; j <= p + 1; ++j) inner += f(q * exp_unit(axis, j * u)) * weights[j];
        acc += inner * kv;
    }
    return -(acc / static_cast<double>(m));
}

RightPolynomial delayed_mean_operator(const RightPolynomial& f, int n) {
    return apply_multipliers(f.coefficients(), Kernel::fejer_delayed(n));
}

RightPolynomial delayed_mean_operator(const PowerSeries& f, int n) {
    return apply_multipliers(f.coefficients(), Kernel::fejer_delayed(n));
}

Quaternion delayed_mean_operator(const SliceFunction& f, const Quaternion& q, int n, int m) {
    return convolve_pointwise(f, q, Kernel::fejer_delayed(n), m);
}

LaurentPolynomial laurent_approx_on_sphere(const SliceFunction& f, int n, int m) {
    if (n < 1) throw std::invalid_argument("laurent_approx_on_sphere: n must be positive");
    const Kernel kernel = Kernel::fejer_delayed(n);
    const int harmonics = kernel.degree();  // 2n - 1
    if (m <= 0) m = std::max(512, 16 * n);

    // Sample alpha (even) and beta (odd) around one slice circle.
    std::vector<Quaternion> alpha(m), beta(m);
    std::vector<double> theta(m);
    const double h = 2.0 * kPi / m;
    for (int s = 0; s < m; ++s) {
        theta[s] = -kPi + (s + 0.5) * h;
        const double x = std::cos(theta[s]);
        const double y = std::sin(theta[s]);
        auto [a, b] = f.alpha_beta(x, y);
        alpha[s] = a;
        beta[s] = (y < 0.0) ? -b : b;
    }

    // Fourier coefficients damped by the delayed-mean multipliers, then
    // cos/sin modes folded into powers q^k and q^{-k}.
    std::vector<Quaternion> nonneg(harmonics + 1), neg(harmonics);
    for (int k = 0; k <= harmonics; ++k) {
        Quaternion ca{}, sb{};
        for (int s = 0; s < m; ++s) {
            ca += alpha[s] * std::cos(k * theta[s]);
            if (k > 0) sb += beta[s] * std::sin(k * theta[s]);
        }
        const double scale = (k == 0 ? 1.0 : 2.0) / m;
        const Quaternion A = ca * (scale * kernel.multiplier(k));
        if (k == 0) {
            nonneg[0] = A;
            continue;
        }
        const Quaternion B = sb * (2.0 / m * kernel.multiplier(k));
        nonneg[k] = (A + B) * 0.5;
        neg[k - 1] = (A - B) * 0.5;
    }
    return LaurentPolynomial(std::move(neg), std::move(nonneg));
}

}  // namespace slice
