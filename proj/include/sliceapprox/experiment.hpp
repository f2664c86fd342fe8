#pragma once

// Experiment orchestration: flag parsing, the built-in function registry,
// sweeps over (domain, function, kernel, n) and CSV emission.  The CLI binary
// is a thin wrapper over run_experiment so everything here is testable
// in-process.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sliceapprox/error_analysis.hpp"
#include "sliceapprox/geometry.hpp"

namespace slice {

// Raised on malformed flags or configuration; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainSpec {
    std::string kind = "ball";  // ball | cassini | sphere
    double x0 = 0.0;
    double y0 = 1.0;
    double R = 1.0;

    CompactDomain build() const;
};

struct ExperimentConfig {
    std::string command;  // approx | verify | kernels | sample | boundary
    DomainSpec domain;
    std::vector<std::string> functions;
    std::string kernel = "dvp";
    std::vector<int> degrees;
    int jackson_p = 0;           // genjackson order parameter
    int gen_jackson_r = 2;       // kernels dump only
    int samples = 2000;
    int quad_nodes = 0;          // 0 = kernel default
    std::uint64_t seed = 0;
    std::string out;             // CSV path; empty = stdout
    bool timing = false;         // real wall time in the seconds column
    std::string curve = "hypocycloid";
    int curve_m = 3;
    int curve_samples = 256;
};

// argv after the program name: {"approx", "--domain", "ball", ...}.
// Throws UsageError on unknown flags, malformed numbers or missing files.
ExperimentConfig parse_config(const std::vector<std::string>& args);

// Emits the flag list parse_config would turn back into the same config.
std::vector<std::string> config_to_args(const ExperimentConfig& cfg);

// The canonical bound-verification sweep run by plain `verify`.
ExperimentConfig default_verify_config();

struct TestFunction {
    std::string name;
    SliceFunction function;
    double lipschitz = -1.0;  // analytic constant over the domain; < 0 if unknown
};

// const | id | q2 | q3 | cassini:<file> | series:<file> | sphere-trig:<file>
TestFunction make_registry_function(const std::string& id, const CompactDomain& domain);

struct ExperimentResult {
    std::string csv;        // header plus sorted rows
    std::string summary;    // human-readable table
    int exit_code = 0;      // 0 all pass, 1 a certified bound failed, 2 config error
    std::vector<ApproximationReport> reports;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Worker cap for sweep cells: SLICE_APPROX_THREADS, 0 or unset = auto.
int thread_budget();

}  // namespace slice
