#include "sliceapprox/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>
#include <tuple>

#include "sliceapprox/serialization.hpp"

namespace slice {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("malformed number for " + flag + ": '" + s + "'");
    }
}

int parse_int(const std::string& s, const std::string& flag) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw UsageError("malformed integer for " + flag + ": '" + s + "'");
    }
}

std::uint64_t parse_seed(const std::string& s, const std::string& flag) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("malformed integer for " + flag + ": '" + s + "'");
    }
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_int(item, flag));
    }
    return out;
}

}  // namespace

CompactDomain DomainSpec::build() const {
    if (kind == "ball") return CompactDomain::ball(x0, R);
    if (kind == "cassini") return CompactDomain::cassini_cell(x0, y0, R);
    if (kind == "sphere") return CompactDomain::unit_sphere();
    throw UsageError("unknown domain '" + kind + "' (ball, cassini, sphere)");
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("missing subcommand (approx, verify, kernels, sample, boundary)");
    ExperimentConfig cfg;
    cfg.command = args[0];
    const bool known = cfg.command == "approx" || cfg.command == "verify" ||
                       cfg.command == "kernels" || cfg.command == "sample" ||
                       cfg.command == "boundary";
    if (!known) throw UsageError("unknown subcommand '" + cfg.command + "'");

    if (cfg.command == "verify") {
        const ExperimentConfig defaults = default_verify_config();
        cfg.samples = defaults.samples;
    }

    auto need_value = [&](std::size_t i, const std::string& flag) -> const std::string& {
        if (i + 1 >= args.size()) throw UsageError("flag " + flag + " needs a value");
        return args[i + 1];
    };

    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--domain") cfg.domain.kind = need_value(i++, a);
        else if (a == "--R") cfg.domain.R = parse_double(need_value(i++, a), a);
        else if (a == "--x0") cfg.domain.x0 = parse_double(need_value(i++, a), a);
        else if (a == "--y0") cfg.domain.y0 = parse_double(need_value(i++, a), a);
        else if (a == "--function") cfg.functions.push_back(need_value(i++, a));
        else if (a == "--kernel") cfg.kernel = need_value(i++, a);
        else if (a == "--n") cfg.degrees = parse_int_list(need_value(i++, a), a);
        else if (a == "--p") cfg.jackson_p = parse_int(need_value(i++, a), a);
        else if (a == "--r") cfg.gen_jackson_r = parse_int(need_value(i++, a), a);
        else if (a == "--samples") cfg.samples = parse_int(need_value(i++, a), a);
        else if (a == "--quad-nodes") cfg.quad_nodes = parse_int(need_value(i++, a), a);
        else if (a == "--seed") cfg.seed = parse_seed(need_value(i++, a), a);
        else if (a == "--out") cfg.out = need_value(i++, a);
        else if (a == "--timing") cfg.timing = true;
        else if (a == "--curve") cfg.curve = need_value(i++, a);
        else if (a == "--m") cfg.curve_m = parse_int(need_value(i++, a), a);
        else throw UsageError("unknown flag '" + a + "'");
    }

    // Validation shared by all subcommands.
    if (!(cfg.domain.R > 0.0)) throw UsageError("--R must be positive");
    if (cfg.domain.kind == "cassini" && cfg.domain.y0 < 0.0)
        throw UsageError("--y0 must be nonnegative");
    if (cfg.samples <= 0) throw UsageError("--samples must be positive");
    if (cfg.quad_nodes < 0) throw UsageError("--quad-nodes must be nonnegative");
    if (cfg.jackson_p < 0) throw UsageError("--p must be nonnegative");
    for (int n : cfg.degrees)
        if (n < 1) throw UsageError("--n entries must be >= 1");
    const bool kernel_known = cfg.kernel == "dvp" || cfg.kernel == "jackson" ||
                              cfg.kernel == "genjackson" || cfg.kernel == "fejer-delayed";
    if (!kernel_known) throw UsageError("unknown kernel '" + cfg.kernel + "'");

    if (cfg.command == "approx") {
        if (cfg.functions.empty()) throw UsageError("approx needs at least one --function");
        for (const std::string& f : cfg.functions) {
            const auto colon = f.find(':');
            if (colon != std::string::npos) {
                const std::string path = f.substr(colon + 1);
                if (!std::filesystem::exists(path))
                    throw UsageError("function file does not exist: " + path);
            }
        }
    }
    if (cfg.command == "boundary") {
        if (cfg.curve != "hypocycloid" && cfg.curve != "lemniscate" && cfg.curve != "semidisk")
            throw UsageError("unknown curve '" + cfg.curve + "'");
        const int min_m = cfg.curve == "hypocycloid" ? 3 : 2;
        if (cfg.curve != "semidisk" && cfg.curve_m < min_m)
            throw UsageError("--m too small for this curve");
    }
    return cfg;
}

std::vector<std::string> config_to_args(const ExperimentConfig& cfg) {
    std::vector<std::string> args = {cfg.command};
    auto push = [&](const std::string& flag, const std::string& value) {
        args.push_back(flag);
        args.push_back(value);
    };
    push("--domain", cfg.domain.kind);
    push("--R", fmt_double(cfg.domain.R));
    push("--x0", fmt_double(cfg.domain.x0));
    push("--y0", fmt_double(cfg.domain.y0));
    for (const std::string& f : cfg.functions) push("--function", f);
    push("--kernel", cfg.kernel);
    if (!cfg.degrees.empty()) {
        std::string list;
        for (std::size_t i = 0; i < cfg.degrees.size(); ++i)
            list += (i ? "," : "") + std::to_string(cfg.degrees[i]);
        push("--n", list);
    }
    push("--p", std::to_string(cfg.jackson_p));
    push("--r", std::to_string(cfg.gen_jackson_r));
    push("--samples", std::to_string(cfg.samples));
    push("--quad-nodes", std::to_string(cfg.quad_nodes));
    push("--seed", std::to_string(cfg.seed));
    if (!cfg.out.empty()) push("--out", cfg.out);
    if (cfg.timing) args.push_back("--timing");
    push("--curve", cfg.curve);
    push("--m", std::to_string(cfg.curve_m));
    return args;
}

ExperimentConfig default_verify_config() {
    ExperimentConfig cfg;
    cfg.command = "verify";
    cfg.kernel = "dvp";
    cfg.samples = 4000;
    cfg.seed = 0;
    return cfg;
}

namespace {

// Taylor shift: returns the coefficients of p(q + h) for real h.
std::vector<Quaternion> shift_coefficients(const std::vector<Quaternion>& c, double h) {
    if (h == 0.0) return c;
    const int deg = static_cast<int>(c.size()) - 1;
    std::vector<Quaternion> out(c.size());
    for (int k = deg; k >= 0; --k) {
        // binomials of row k accumulated into powers 0..k
        double binom = 1.0;
        double hp = 1.0;
        for (int p = k; p >= 0; --p) {
            out[p] += c[k] * (binom * hp);
            binom = binom * p / (k - p + 1);
            hp *= h;
        }
    }
    return out;
}

}  // namespace

TestFunction make_registry_function(const std::string& id, const CompactDomain& domain) {
    const double M = domain.norm_bound();
    if (id == "const") return {id, SliceFunction(RightPolynomial({quat_one})), 0.0};
    if (id == "id") return {id, SliceFunction(RightPolynomial({Quaternion{}, quat_one})), 1.0};
    if (id == "q2")
        return {id, SliceFunction(RightPolynomial({Quaternion{}, Quaternion{}, quat_one})),
                2.0 * M};
    if (id == "q3")
        return {id,
                SliceFunction(RightPolynomial(
                    {Quaternion{}, Quaternion{}, Quaternion{}, quat_one})),
                3.0 * M * M};

    const auto colon = id.find(':');
    if (colon == std::string::npos)
        throw UsageError("unknown function id '" + id +
                         "' (const, id, q2, q3, cassini:<file>, series:<file>, sphere-trig:<file>)");
    const std::string scheme = id.substr(0, colon);
    const std::string path = id.substr(colon + 1);
    StoredFunction stored = [&] {
        try {
            return load_function_file(path);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }();
    if (scheme == "cassini" && stored.type != "cassini-series")
        throw UsageError("file " + path + " does not hold a cassini-series");
    if (scheme == "series" && stored.type != "power-series" && stored.type != "polynomial")
        throw UsageError("file " + path + " does not hold a series or polynomial");
    if (scheme == "sphere-trig" && stored.type != "sphere-trig")
        throw UsageError("file " + path + " does not hold sphere-trig data");

    double lipschitz = stored.lipschitz.value_or(-1.0);
    if (lipschitz < 0.0 && stored.type == "cassini-series" &&
        domain.kind() == CompactDomain::Kind::CassiniCell)
        lipschitz = cassini_lipschitz_bound(*stored.function.as_cassini(), domain.radius());
    return {id, std::move(stored.function), lipschitz};
}

namespace {

struct SweepCell {
    TestFunction fn;
    int n = 0;
};

// Closed-form approximant on the chosen domain for the configured kernel.
SliceFunction build_approximant(const ExperimentConfig& cfg, const CompactDomain& domain,
                                const TestFunction& fn, int n) {
    if (domain.kind() == CompactDomain::Kind::UnitSphere) {
        // On the sphere all approximants are the delayed-mean Laurent
        // construction regardless of kernel choice.
        return SliceFunction(laurent_approx_on_sphere(fn.function, n, cfg.quad_nodes));
    }

    std::vector<Quaternion> coeffs;
    if (const auto* p = fn.function.as_polynomial())
        coeffs = p->coefficients();
    else if (const auto* s = fn.function.as_power_series())
        coeffs = s->coefficients();
    else if (const auto* c = fn.function.as_cassini())
        coeffs = cassini_to_polynomial(*c).coefficients();
    else
        throw UsageError("function '" + fn.name + "' has no series form for closed operators");

    // Balls centered off the origin: approximate f(w + x0) on B(0, R), then
    // substitute w = q - x0 back.
    const double shift = domain.kind() == CompactDomain::Kind::Ball ? domain.x0() : 0.0;
    if (shift != 0.0) coeffs = shift_coefficients(coeffs, shift);

    RightPolynomial approx;
    if (cfg.kernel == "dvp") {
        approx = apply_multipliers(coeffs, Kernel::dvp(n));
    } else if (cfg.kernel == "jackson") {
        approx = apply_multipliers(coeffs, Kernel::jackson(n));
    } else if (cfg.kernel == "fejer-delayed") {
        approx = apply_multipliers(coeffs, Kernel::fejer_delayed(n));
    } else {  // genjackson
        const int r = (cfg.jackson_p + 3) / 2;
        const Kernel k = Kernel::gen_jackson(n, r);
        std::vector<Quaternion> out(coeffs.size());
        for (std::size_t l = 0; l < coeffs.size(); ++l)
            out[l] = coeffs[l] * generalized_jackson_multiplier(k, cfg.jackson_p,
                                                                static_cast<int>(l));
        approx = RightPolynomial(std::move(out));
    }
    if (shift != 0.0) {
        auto back = shift_coefficients(approx.coefficients(), -shift);
        approx = RightPolynomial(std::move(back));
    }
    return SliceFunction(std::move(approx));
}

ApproximationReport run_cell(const ExperimentConfig& cfg, const CompactDomain& domain,
                             const std::vector<Quaternion>& grid, const TestFunction& fn, int n) {
    const auto t0 = std::chrono::steady_clock::now();
    const SliceFunction approx = build_approximant(cfg, domain, fn, n);

    ApproximationReport report;
    report.op = domain.kind() == CompactDomain::Kind::UnitSphere ? "laurent" : cfg.kernel;
    report.degree = n;
    report.domain = domain.describe();
    report.function = fn.name;
    report.samples = static_cast<int>(grid.size());
    report.sup_error = sup_error(fn.function, approx, grid);

    // Certified bounds exist for the de la Vallee Poussin operator only.
    if (cfg.kernel == "dvp" && fn.lipschitz >= 0.0 &&
        domain.kind() != CompactDomain::Kind::UnitSphere) {
        const AnalyticModulus modulus{fn.lipschitz};
        if (domain.kind() == CompactDomain::Kind::CassiniCell)
            report.bound = cassini_bound(domain.x0(), domain.y0(), domain.radius(),
                                         ModulusSpec{modulus}, n)
                               .proof;
        else
            report.bound = dvp_bound(domain.radius(), ModulusSpec{modulus}, n);
        report.ratio = report.bound > 0.0 ? report.sup_error / report.bound : 0.0;
        report.pass = report.sup_error <= report.bound;
    } else {
        report.pass = true;  // nothing certified to fail
    }
    if (cfg.timing)
        report.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string csv_header() {
    return "domain,function,kernel,n,sup_error,bound,ratio,samples,seconds";
}

std::string csv_row(const ApproximationReport& r) {
    std::ostringstream os;
    os << r.domain << ',' << r.function << ',' << r.op << ',' << r.degree << ','
       << fmt_double(r.sup_error) << ',' << fmt_double(r.bound) << ',' << fmt_double(r.ratio)
       << ',' << r.samples << ',' << fmt_double(r.seconds);
    return os.str();
}

ExperimentResult finish_sweep(std::vector<ApproximationReport> reports) {
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        return std::tie(a.domain, a.function, a.op, a.degree) <
               std::tie(b.domain, b.function, b.op, b.degree);
    });
    ExperimentResult result;
    std::ostringstream csv, human;
    csv << csv_header() << '\n';
    human << "domain                  function     kernel          n   sup_error     bound       status\n";
    bool any_fail = false;
    for (const auto& r : reports) {
        csv << csv_row(r) << '\n';
        char line[256];
        std::snprintf(line, sizeof line, "%-23s %-12s %-14s %4d  %-12.4e %-12.4e %s\n",
                      r.domain.c_str(), r.function.c_str(), r.op.c_str(), r.degree, r.sup_error,
                      r.bound, r.bound > 0.0 ? (r.pass ? "PASS" : "FAIL") : "-");
        human << line;
        if (r.bound > 0.0 && !r.pass) any_fail = true;
    }
    result.csv = csv.str();
    result.summary = human.str();
    result.exit_code = any_fail ? 1 : 0;
    result.reports = std::move(reports);
    return result;
}

ExperimentResult run_approx_like(const ExperimentConfig& cfg,
                                 const std::vector<std::pair<DomainSpec, std::string>>& jobs) {
    // jobs: (domain, function id) pairs; the n sweep applies to each.
    struct Prepared {
        CompactDomain domain;
        std::vector<Quaternion> grid;
        TestFunction fn;
        int n;
    };
    std::vector<Prepared> cells;
    for (const auto& [dspec, fid] : jobs) {
        const CompactDomain domain = dspec.build();
        const SampleGrid grid = sample(domain, cfg.samples, cfg.seed);
        TestFunction fn = make_registry_function(fid, domain);
        for (int n : cfg.degrees)
            cells.push_back({domain, grid.points, fn, n});
    }

    std::vector<ApproximationReport> reports(cells.size());
    const int workers =
        std::min(thread_budget(), static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            reports[i] = run_cell(cfg, cells[i].domain, cells[i].grid, cells[i].fn, cells[i].n);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> cursor{0};
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= cells.size()) return;
                    reports[i] =
                        run_cell(cfg, cells[i].domain, cells[i].grid, cells[i].fn, cells[i].n);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    return finish_sweep(std::move(reports));
}

// The three built-in Cassini test series used by the canonical verify sweep,
// centered on the target cell.
std::vector<std::pair<std::string, CassiniSeries>> verify_cassini_functions(double x0, double y0) {
    using Pair = std::pair<Quaternion, Quaternion>;
    std::vector<std::pair<std::string, CassiniSeries>> out;
    out.emplace_back("cassini1", CassiniSeries(x0, y0, {Pair{quat_one, Quaternion{}}}));
    out.emplace_back("cassini2", CassiniSeries(x0, y0,
                                               {Pair{quat_i * 0.5, quat_j * 0.25},
                                                Pair{Quaternion(0.125), quat_k * 0.0625}}));
    out.emplace_back("cassini3", CassiniSeries(x0, y0,
                                               {Pair{Quaternion(0.4), quat_i * 0.2},
                                                Pair{quat_j * 0.1, Quaternion(0.05)},
                                                Pair{quat_k * 0.025, Quaternion(0.0125)}}));
    return out;
}

ExperimentResult run_verify(const ExperimentConfig& cfg) {
    std::vector<ApproximationReport> reports;

    // Ball sweep: id, q2, q3 on B(0,1), n in {4,16,64,256}.
    {
        ExperimentConfig ball = cfg;
        ball.kernel = "dvp";
        ball.domain = DomainSpec{"ball", 0.0, 0.0, 1.0};
        ball.degrees = {4, 16, 64, 256};
        std::vector<std::pair<DomainSpec, std::string>> jobs = {
            {ball.domain, "id"}, {ball.domain, "q2"}, {ball.domain, "q3"}};
        auto r = run_approx_like(ball, jobs);
        reports.insert(reports.end(), r.reports.begin(), r.reports.end());
    }

    // Cassini sweep: three series on two cells, n in {4,16,64}.
    for (const auto& [x0, y0, R] : {std::tuple{0.0, 1.0, 1.0}, std::tuple{1.0, 1.0, 2.0}}) {
        const CompactDomain cell = CompactDomain::cassini_cell(x0, y0, R);
        const SampleGrid grid = sample(cell, cfg.samples, cfg.seed);
        for (const auto& [name, series] : verify_cassini_functions(x0, y0)) {
            const double L = cassini_lipschitz_bound(series, R);
            for (int n : {4, 16, 64}) {
                const RightPolynomial approx = cassini_operator_closed(series, n);
                ApproximationReport rep =
                    verify_bound(SliceFunction(series), SliceFunction(approx), cell,
                                 ModulusSpec{AnalyticModulus{L}}, n, grid.points, "dvp", name);
                reports.push_back(std::move(rep));
            }
        }
    }
    return finish_sweep(std::move(reports));
}

ExperimentResult run_kernels_dump(const ExperimentConfig& cfg) {
    ExperimentResult result;
    std::ostringstream csv;
    csv << "variant,n,j,rho\n";
    if (cfg.degrees.empty())
        throw UsageError("kernels needs --n <list>");
    for (int n : cfg.degrees) {
        Kernel k = cfg.kernel == "dvp"           ? Kernel::dvp(n)
                   : cfg.kernel == "jackson"     ? Kernel::jackson(n)
                   : cfg.kernel == "genjackson"  ? Kernel::gen_jackson(n, cfg.gen_jackson_r)
                                                 : Kernel::fejer_delayed(n);
        for (int j = 0; j <= k.degree(); ++j)
            csv << k.name() << ',' << n << ',' << j << ',' << fmt_double(k.multiplier(j)) << '\n';
    }
    result.csv = csv.str();
    result.summary = result.csv;
    return result;
}

ExperimentResult run_sample_dump(const ExperimentConfig& cfg) {
    ExperimentResult result;
    const CompactDomain domain = cfg.domain.build();
    const SampleGrid grid = sample(domain, cfg.samples, cfg.seed);
    std::ostringstream csv;
    csv << "w,x,y,z\n";
    for (const Quaternion& q : grid.points)
        csv << fmt_double(q.w) << ',' << fmt_double(q.x) << ',' << fmt_double(q.y) << ','
            << fmt_double(q.z) << '\n';
    result.csv = csv.str();
    std::ostringstream human;
    human << grid.points.size() << " samples from " << domain.describe() << "\n";
    result.summary = human.str();
    return result;
}

ExperimentResult run_boundary_dump(const ExperimentConfig& cfg) {
    const BoundaryKind kind = cfg.curve == "hypocycloid" ? BoundaryKind::Hypocycloid
                              : cfg.curve == "lemniscate" ? BoundaryKind::Lemniscate
                                                          : BoundaryKind::Semidisk;
    ExperimentResult result;
    std::ostringstream csv;
    csv << "theta,x,y\n";
    const int count = cfg.curve_samples;
    const auto excluded = boundary_exclusion_angles(kind, cfg.curve_m);
    for (int s = 0; s < count; ++s) {
        const double theta = -3.141592653589793 + (s + 0.5) * 2.0 * 3.141592653589793 / count;
        bool skip = false;
        for (double a : excluded)
            if (std::fabs(std::remainder(theta - a, 2.0 * 3.141592653589793)) < 0.05) skip = true;
        if (skip) continue;
        const PlanarPoint z = example_boundary(kind, cfg.curve_m, theta);
        csv << fmt_double(theta) << ',' << fmt_double(z.x) << ',' << fmt_double(z.y) << '\n';
    }
    result.csv = csv.str();
    result.summary = "curve " + cfg.curve + "\n";
    return result;
}

}  // namespace

int thread_budget() {
    const char* env = std::getenv("SLICE_APPROX_THREADS");
    if (env) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "kernels") return run_kernels_dump(cfg);
    if (cfg.command == "sample") return run_sample_dump(cfg);
    if (cfg.command == "boundary") return run_boundary_dump(cfg);
    if (cfg.command == "approx") {
        std::vector<std::pair<DomainSpec, std::string>> jobs;
        for (const std::string& f : cfg.functions) jobs.emplace_back(cfg.domain, f);
        ExperimentResult r = run_approx_like(cfg, jobs);
        if (cfg.degrees.empty())
            r.summary += "warning: empty degree list, no rows produced\n";
        return r;
    }
    throw UsageError("unknown subcommand '" + cfg.command + "'");
}

}  // namespace slice
