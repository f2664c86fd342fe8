#include "sliceapprox/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace slice {

namespace {
constexpr double kPi = std::numbers::pi;
}

Quaternion quadrature_periodic(const std::function<Quaternion(double)>& g, int m) {
    if (m < 2) throw std::invalid_argument("quadrature_periodic: need at least 2 nodes");
    Quaternion acc{};
    const double h = 2.0 * kPi / m;
    for (int s = 0; s < m; ++s) {
        const double u = -kPi + (s + 0.5) * h;  // midpoint nodes avoid u = 0 and u = +-pi
        acc += g(u);
    }
    return acc / static_cast<double>(m);
}

double quadrature_periodic_real(const std::function<double(double)>& g, int m) {
    if (m < 2) throw std::invalid_argument("quadrature_periodic: need at least 2 nodes");
    double acc = 0.0;
    const double h = 2.0 * kPi / m;
    for (int s = 0; s < m; ++s) acc += g(-kPi + (s + 0.5) * h);
    return acc / m;
}

double fejer_core(int n, double u) {
    const double den = std::sin(0.5 * u);
    if (den == 0.0) return static_cast<double>(n) * n;
    const double ratio = std::sin(0.5 * n * u) / den;
    return ratio * ratio;
}

double dvp_multiplier(int n, int j) {
    if (j < 0) throw std::invalid_argument("dvp_multiplier: negative index");
    if (j > n) return 0.0;
    double prod = 1.0;
    for (int s = 0; s < j; ++s) prod *= static_cast<double>(n - s) / (n + s + 1);
    return prod;
}

Kernel Kernel::dvp(int n) { return Kernel(KernelKind::DVP, n, 0); }
Kernel Kernel::jackson(int n) { return Kernel(KernelKind::Jackson, n, 2); }
Kernel Kernel::gen_jackson(int n, int r) { return Kernel(KernelKind::GenJackson, n, r); }
Kernel Kernel::fejer_delayed(int n) { return Kernel(KernelKind::FejerDelayed, n, 0); }

Kernel::Kernel(KernelKind kind, int n, int r) : kind_(kind), n_(n), r_(r), norm_(1.0) {
    if (n < 1) throw std::invalid_argument("Kernel: degree parameter must be positive");
    if (kind == KernelKind::GenJackson && r < 1)
        throw std::invalid_argument("Kernel: GenJackson exponent must be positive");

    switch (kind_) {
        case KernelKind::DVP:
            degree_ = n_;
            // (n!)^2/(2n)! as a product of ratios s/(n+s), never via factorials.
            norm_ = 1.0;
            for (int s = 1; s <= n_; ++s) norm_ *= static_cast<double>(s) / (n_ + s);
            multipliers_.resize(degree_ + 1);
            for (int j = 0; j <= degree_; ++j) multipliers_[j] = dvp_multiplier(n_, j);
            break;
        case KernelKind::Jackson:
        case KernelKind::GenJackson: {
            degree_ = r_ * (n_ - 1);
            // The normalization constant is defined implicitly by
            // (1/2pi) int K = 1; fix it by quadrature of the core.
            const int m = std::max(256, 8 * degree_ + 64);
            norm_ = quadrature_periodic_real([&](double u) { return std::pow(fejer_core(n_, u), r_); }, m);
            multipliers_.resize(degree_ + 1);
            for (int j = 0; j <= degree_; ++j) {
                multipliers_[j] = quadrature_periodic_real(
                    [&](double u) { return (*this)(u)*std::cos(j * u); }, m);
            }
            multipliers_[0] = 1.0;
            break;
        }
        case KernelKind::FejerDelayed:
            degree_ = 2 * n_ - 1;
            multipliers_.resize(degree_ + 1);
            for (int j = 0; j <= degree_; ++j) {
                // 2 max(0, 1 - j/2n) - max(0, 1 - j/n): identically 1 up to n,
                // then linear down to 0 at 2n.
                multipliers_[j] = (j <= n_) ? 1.0 : static_cast<double>(2 * n_ - j) / n_;
            }
            break;
    }
}

double Kernel::operator()(double u) const {
    switch (kind_) {
        case KernelKind::DVP: {
            // ((n!)^2/(2n)!) (2 cos(u/2))^{2n}
            const double c = 2.0 * std::cos(0.5 * u);
            return norm_ * std::pow(c * c, n_);
        }
        case KernelKind::Jackson:
        case KernelKind::GenJackson:
            return std::pow(fejer_core(n_, u), r_) / norm_;
        case KernelKind::FejerDelayed:
            // 2 L_{2n} - L_n as pointwise kernels, each normalized to unit mean.
            return (fejer_core(2 * n_, u) / (2.0 * n_)) * 2.0 - fejer_core(n_, u) / n_;
    }
    return 0.0;  // unreachable
}

int Kernel::default_quadrature_nodes() const {
    return std::max(256, 8 * degree_);
}

std::string Kernel::name() const {
    switch (kind_) {
        case KernelKind::DVP: return "dvp";
        case KernelKind::Jackson: return "jackson";
        case KernelKind::GenJackson: return "genjackson";
        case KernelKind::FejerDelayed: return "fejer-delayed";
    }
    return "?";
}

}  // namespace slice
