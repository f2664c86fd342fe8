#pragma once

// Trigonometric convolution kernels and their Fourier multipliers.
//
// Every kernel K here is even, 2*pi-periodic and normalized so that
// (1/2pi) \int_{-pi}^{pi} K(u) du = 1.  Its multiplier table rho_0..rho_M
// holds the factor the induced convolution operator applies to the degree-j
// coefficient of a series; equivalently K(u) = 1 + 2 sum_j rho_j cos(j u).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sliceapprox/quaternion.hpp"

namespace slice {

enum class KernelKind {
    DVP,            // de la Vallee Poussin: ((n!)^2/(2n)!) (2 cos(u/2))^{2n}
    Jackson,        // normalized (sin(nu/2)/sin(u/2))^4
    GenJackson,     // normalized (sin(nu/2)/sin(u/2))^{2r}
    FejerDelayed,   // 2*Fejer_{2n} - Fejer_n delayed means (signed)
};

// (1/2pi) integral over one period of a smooth periodic integrand,
// midpoint rule on m uniform nodes.  Exact for trigonometric polynomials of
// degree < m, spectrally accurate otherwise.
Quaternion quadrature_periodic(const std::function<Quaternion(double)>& g, int m);
double quadrature_periodic_real(const std::function<double(double)>& g, int m);

// (sin(n u / 2) / sin(u / 2))^2 with the removable singularity at u = 0
// (and at multiples of 2*pi) evaluated as n^2.
double fejer_core(int n, double u);

// (n!)^2 / ((n-j)! (n+j)!) as the running product prod_{s<j} (n-s)/(n+s+1);
// no factorials are formed, so large n does not overflow.  Zero for j > n.
double dvp_multiplier(int n, int j);

class Kernel {
  public:
    static Kernel dvp(int n);
    static Kernel jackson(int n);
    static Kernel gen_jackson(int n, int r);
    static Kernel fejer_delayed(int n);

    KernelKind kind() const { return kind_; }
    int n() const { return n_; }
    int r() const { return r_; }

    // Largest harmonic with a (possibly) nonzero multiplier.
    int degree() const { return degree_; }

    // Normalized pointwise value at u in [-pi, pi].
    double operator()(double u) const;

    // rho_j for j = 0..degree(); rho_0 = 1.
    const std::vector<double>& multipliers() const { return multipliers_; }
    double multiplier(int j) const {
        return (j >= 0 && j < static_cast<int>(multipliers_.size())) ? multipliers_[j] : 0.0;
    }

    // Node count that integrates this kernel against low-order harmonics
    // exactly: m > 2*degree with margin.
    int default_quadrature_nodes() const;

    // Jackson family: the quadrature-fixed mean of the unnormalized core,
    // i.e. (1/2pi) int (sin(nu/2)/sin(u/2))^{2r} du.  For the DVP kernel this
    // is the closed-form prefactor (n!)^2/(2n)!.
    double core_normalization() const { return norm_; }

    std::string name() const;

  private:
    Kernel(KernelKind kind, int n, int r);

    KernelKind kind_;
    int n_;
    int r_;        // GenJackson exponent; 2 for Jackson, 1 conceptually for Fejer parts
    int degree_;
    double norm_;  // normalization of the Jackson-family core, fixed by quadrature
    std::vector<double> multipliers_;
};

}  // namespace slice
