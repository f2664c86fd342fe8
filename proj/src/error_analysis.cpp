#include "sliceapprox/error_analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace slice {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

double sup_error(const SliceFunction& f, const SliceFunction& approx,
                 const std::vector<Quaternion>& grid) {
    double worst = 0.0;
    for (const Quaternion& q : grid) worst = std::max(worst, (f(q) - approx(q)).norm());
    return worst;
}

double modulus_estimate(const SliceFunction& f, double delta, const ModulusSpec& spec) {
    if (!(delta > 0.0)) throw std::invalid_argument("modulus_estimate: delta must be positive");
    if (const auto* analytic = std::get_if<AnalyticModulus>(&spec))
        return analytic->lipschitz * delta;

    const auto& sampled = std::get<SampledModulus>(spec);
    const auto& pts = sampled.points;
    const std::size_t count = pts.size();
    if (count < 2) return 0.0;
    double worst = 0.0;
    const std::size_t total_pairs = count * (count - 1) / 2;
    if (total_pairs <= static_cast<std::size_t>(sampled.pair_budget)) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) {
                if ((pts[i] - pts[j]).norm() > delta) continue;
                worst = std::max(worst, (f(pts[i]) - f(pts[j])).norm());
            }
    } else {
        std::uint64_t state = sampled.seed * 0x9e3779b97f4a7c15ULL + 17;
        for (int b = 0; b < sampled.pair_budget; ++b) {
            const std::size_t i = splitmix64(state) % count;
            const std::size_t j = splitmix64(state) % count;
            if (i == j || (pts[i] - pts[j]).norm() > delta) continue;
            worst = std::max(worst, (f(pts[i]) - f(pts[j])).norm());
        }
    }
    return worst;
}

double modulus_p_estimate(const SliceFunction& f, int p, double delta,
                          const std::vector<Quaternion>& points, int step_count) {
    if (p < 1) throw std::invalid_argument("modulus_p_estimate: order must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("modulus_p_estimate: delta must be positive");
    std::vector<double> weights(p + 1);
    double binom = 1.0;
    for (int s = 0; s <= p; ++s) {
        weights[s] = ((p - s) % 2 == 0 ? 1.0 : -1.0) * binom;
        binom = binom * (p - s) / (s + 1);
    }
    double worst = 0.0;
    for (const Quaternion& q : points) {
        const ImagUnit axis = slice_decompose(q, canonical_unit()).axis;
        for (int step = 1; step <= step_count; ++step) {
            const double h = delta * step / step_count;
            Quaternion diff{};
            for (int s = 0; s <= p; ++s) diff += f(q * exp_unit(axis, s * h)) * weights[s];
            worst = std::max(worst, diff.norm());
        }
    }
    return worst;
}

double dvp_bound(double R, const ModulusSpec& modulus, int n) {
    if (n < 1) throw std::invalid_argument("dvp_bound: n must be positive");
    const auto* analytic = std::get_if<AnalyticModulus>(&modulus);
    if (!analytic)
        throw std::invalid_argument(
            "dvp_bound: sampled modulus gives only a non-certifying diagnostic");
    return 3.0 * (R + 1.0) * analytic->lipschitz / std::sqrt(static_cast<double>(n));
}

double cassini_norm_bound(double x0, double y0, double R) {
    return std::sqrt(R * R + 2.0 * std::fabs(x0) * std::sqrt(R * R + y0 * y0) + x0 * x0 + y0 * y0);
}

CassiniBound cassini_bound(double x0, double y0, double R, const ModulusSpec& modulus, int n) {
    if (n < 1) throw std::invalid_argument("cassini_bound: n must be positive");
    const auto* analytic = std::get_if<AnalyticModulus>(&modulus);
    if (!analytic)
        throw std::invalid_argument(
            "cassini_bound: sampled modulus gives only a non-certifying diagnostic");
    const double omega = analytic->lipschitz / std::sqrt(static_cast<double>(n));
    CassiniBound b;
    b.m_value = cassini_norm_bound(x0, y0, R);
    b.stated = 3.0 * (R + 1.0) * omega;
    b.proof = 3.0 * (b.m_value + 1.0) * omega;
    return b;
}

double cassini_lipschitz_bound(const CassiniSeries& s, double R) {
    // |B(u)^k - B(v)^k| <= k R^{2(k-1)} L_B |u - v| with L_B = 2 sqrt(R^2+y0^2),
    // and |B^k u c - B^k v c| picks up an extra R^{2k} + k R^{2(k-1)} L_B M.
    const double M = cassini_norm_bound(s.x0(), s.y0(), R);
    const double L_B = 2.0 * std::sqrt(R * R + s.y0() * s.y0());
    double L = 0.0;
    double r_pow = 1.0;  // R^{2(k-1)}
    for (std::size_t k = 1; k <= s.pairs().size(); ++k) {
        const auto& [c_even, c_odd] = s.pairs()[k - 1];
        const double dk = static_cast<double>(k);
        L += c_even.norm() * dk * r_pow * L_B;
        L += c_odd.norm() * (dk * r_pow * L_B * M + r_pow * R * R);
        r_pow *= R * R;
    }
    return L;
}

double best_approx_estimate(const SliceFunction& f, int n, const std::vector<Quaternion>& grid) {
    if (grid.empty()) throw std::invalid_argument("best_approx_estimate: empty grid");
    std::vector<Quaternion> coeffs;
    if (const auto* p = f.as_polynomial())
        coeffs = p->coefficients();
    else if (const auto* s = f.as_power_series())
        coeffs = s->coefficients();
    else if (const auto* c = f.as_cassini())
        coeffs = cassini_to_polynomial(*c).coefficients();
    else
        throw std::invalid_argument("best_approx_estimate: needs a series presentation");
    const RightPolynomial approx = apply_multipliers(coeffs, Kernel::fejer_delayed(n));
    return sup_error(f, SliceFunction(approx), grid);
}

ApproximationReport verify_bound(const SliceFunction& f, const SliceFunction& approx,
                                 const CompactDomain& domain, const ModulusSpec& modulus, int n,
                                 const std::vector<Quaternion>& grid, const std::string& op,
                                 const std::string& function_name) {
    ApproximationReport report;
    report.op = op;
    report.degree = n;
    report.domain = domain.describe();
    report.function = function_name;
    report.samples = static_cast<int>(grid.size());
    report.sup_error = sup_error(f, approx, grid);
    if (domain.kind() == CompactDomain::Kind::CassiniCell) {
        report.bound =
            cassini_bound(domain.x0(), domain.y0(), domain.radius(), modulus, n).proof;
    } else {
        report.bound = dvp_bound(domain.radius(), modulus, n);
    }
    report.ratio = report.bound > 0.0 ? report.sup_error / report.bound : 0.0;
    report.pass = report.sup_error <= report.bound;
    return report;
}

}  // namespace slice
