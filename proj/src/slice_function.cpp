#include "sliceapprox/slice_function.hpp"

#include <cmath>
#include <stdexcept>

namespace slice {

int RightPolynomial::degree() const {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (!(coeffs_[k] == Quaternion{})) return k;
    return -1;
}

namespace {

// Right-coefficient Horner: acc <- q * acc + c_k, highest degree first.
// Keeps the powers of q on the left of every coefficient.
Quaternion eval_right_poly(const std::vector<Quaternion>& c, const Quaternion& q) {
    Quaternion acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = q * acc + *it;
    return acc;
}

}  // namespace

Quaternion RightPolynomial::operator()(const Quaternion& q) const {
    return eval_right_poly(coeffs_, q);
}

RightPolynomial RightPolynomial::operator+(const RightPolynomial& o) const {
    std::vector<Quaternion> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < coeffs_.size()) c[k] += coeffs_[k];
        if (k < o.coeffs_.size()) c[k] += o.coeffs_[k];
    }
    return RightPolynomial(std::move(c));
}

RightPolynomial RightPolynomial::operator-(const RightPolynomial& o) const {
    std::vector<Quaternion> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < coeffs_.size()) c[k] += coeffs_[k];
        if (k < o.coeffs_.size()) c[k] -= o.coeffs_[k];
    }
    return RightPolynomial(std::move(c));
}

RightPolynomial RightPolynomial::operator*(const Quaternion& a) const {
    std::vector<Quaternion> c(coeffs_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = coeffs_[k] * a;
    return RightPolynomial(std::move(c));
}

Quaternion PowerSeries::operator()(const Quaternion& q) const {
    if (q.norm() > radius_ * (1.0 + 1e-12))
        throw std::domain_error("PowerSeries: evaluation outside declared radius");
    return eval_right_poly(coeffs_, q);
}

Quaternion CassiniSeries::operator()(const Quaternion& q) const {
    // Horner in B = (q - x0)^2 + y0^2; B commutes with q (same slice plane).
    const Quaternion shifted = q - Quaternion(x0_);
    const Quaternion base = shifted * shifted + Quaternion(y0_ * y0_);
    Quaternion acc{};
    for (auto it = pairs_.rbegin(); it != pairs_.rend(); ++it)
        acc = base * (Quaternion(it->first) + q * it->second + acc);
    return acc;
}

Quaternion LaurentPolynomial::operator()(const Quaternion& q) const {
    Quaternion value = eval_right_poly(nonneg_, q);
    if (!neg_.empty()) {
        if (q.norm_sq() == 0.0)
            throw std::domain_error("LaurentPolynomial: negative powers need q != 0");
        const Quaternion p = q.inverse();
        Quaternion acc{};
        for (auto it = neg_.rbegin(); it != neg_.rend(); ++it) acc = p * acc + *it;
        value += p * acc;  // p * (a_{-1} + p a_{-2} + ...) = sum p^k a_{-k}
    }
    return value;
}

Quaternion SliceFunction::operator()(const Quaternion& q) const {
    if (const auto* f = std::get_if<AlphaBetaFunction>(&form_)) {
        const SliceCoords sc = slice_decompose(q);
        auto [alpha, beta] = f->fn(sc.x, sc.y);
        if (sc.y == 0.0) return alpha;
        return alpha + sc.axis.quat() * beta;
    }
    return std::visit([&](const auto& form) -> Quaternion {
        if constexpr (std::is_same_v<std::decay_t<decltype(form)>, AlphaBetaFunction>)
            return Quaternion{};  // handled above
        else
            return form(q);
    }, form_);
}

std::pair<Quaternion, Quaternion> SliceFunction::alpha_beta(double x, double y) const {
    y = std::fabs(y);
    if (const auto* f = std::get_if<AlphaBetaFunction>(&form_)) return f->fn(x, y);
    // Recover alpha, beta from two evaluations on the canonical slice.
    const Quaternion axis = canonical_unit().quat();
    const Quaternion plus = (*this)(Quaternion(x) + axis * y);
    const Quaternion minus = (*this)(Quaternion(x) - axis * y);
    const Quaternion alpha = (plus + minus) * 0.5;
    const Quaternion beta = axis * (minus - plus) * 0.5;
    return {alpha, beta};
}

Quaternion representation_formula(const Quaternion& f_plus, const Quaternion& f_minus,
                                  const ImagUnit& J, const ImagUnit& I) {
    const Quaternion alpha = (f_plus + f_minus) * 0.5;
    const Quaternion jbeta = J.quat() * (f_minus - f_plus) * 0.5;
    return alpha + I.quat() * jbeta;
}

SliceFunction extend_from_slice(std::function<Quaternion(double, double)> g, const ImagUnit& J) {
    AlphaBetaFunction ext;
    ext.fn = [g = std::move(g), J](double x, double y) {
        const Quaternion plus = g(x, y);
        const Quaternion minus = g(x, -y);
        const Quaternion alpha = (plus + minus) * 0.5;
        const Quaternion beta = J.quat() * (minus - plus) * 0.5;
        return std::make_pair(alpha, beta);
    };
    return SliceFunction(std::move(ext));
}

IntrinsicReport is_intrinsic(const SliceFunction& f, const std::vector<Quaternion>& samples,
                             double tolerance) {
    IntrinsicReport report;
    for (const Quaternion& q : samples) {
        const double defect = (f(q.conj()) - f(q).conj()).norm();
        if (defect > report.max_defect) {
            report.max_defect = defect;
            report.worst_point = q;
        }
    }
    report.intrinsic = report.max_defect <= tolerance;
    return report;
}

RightPolynomial cassini_to_polynomial(const CassiniSeries& s) {
    const size_t K = s.pairs().size();
    // Powers of B(q) = (q-x0)^2 + y0^2 have real coefficients, so they
    // commute past every quaternion coefficient.
    std::vector<double> base = {s.x0() * s.x0() + s.y0() * s.y0(), -2.0 * s.x0(), 1.0};
    std::vector<double> bpow = {1.0};
    std::vector<Quaternion> out(2 * K + 2);
    for (size_t k = 1; k <= K; ++k) {
        // bpow <- bpow * base
        std::vector<double> next(bpow.size() + 2, 0.0);
        for (size_t a = 0; a < bpow.size(); ++a)
            for (size_t b = 0; b < 3; ++b) next[a + b] += bpow[a] * base[b];
        bpow = std::move(next);

        const auto& [c_even, c_odd] = s.pairs()[k - 1];
        for (size_t p = 0; p < bpow.size(); ++p) {
            out[p] += c_even * bpow[p];
            out[p + 1] += c_odd * bpow[p];
        }
    }
    return RightPolynomial(std::move(out));
}

}  // namespace slice
