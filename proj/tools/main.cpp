// Experiment CLI: approx | verify | kernels | sample | boundary.
// CSV goes to --out (or stdout); the human summary goes to stdout (or stderr
// when the CSV itself is on stdout).  Exit codes: 0 all certified bounds
// pass, 1 a bound failed, 2 usage or configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "sliceapprox/experiment.hpp"

namespace {

const char* kUsage =
    "usage: sliceapprox <subcommand> [flags]\n"
    "\n"
    "subcommands:\n"
    "  approx    sweep an approximation operator over degrees and report errors\n"
    "            --domain {ball,cassini,sphere} --R <r> [--x0 <x>] [--y0 <y>]\n"
    "            --function <id> [--function <id> ...]   (const, id, q2, q3,\n"
    "                cassini:<file>, series:<file>, sphere-trig:<file>)\n"
    "            --kernel {dvp,jackson,genjackson,fejer-delayed} --n <list>\n"
    "            [--p <order>] [--samples <count>] [--quad-nodes <m>]\n"
    "            [--seed <s>] [--out <csv>] [--timing]\n"
    "  verify    run the canonical bound-verification sweep (balls + Cassini\n"
    "            cells against the de la Vallee Poussin bounds)\n"
    "            [--samples <count>] [--seed <s>] [--out <csv>]\n"
    "  kernels   dump a multiplier table as CSV: variant,n,j,rho\n"
    "            --kernel <variant> --n <list> [--r <exponent>]\n"
    "  sample    emit a deterministic sample grid as CSV: w,x,y,z\n"
    "            --domain ... --samples <count> --seed <s>\n"
    "  boundary  emit a boundary curve as CSV: theta,x,y\n"
    "            --curve {hypocycloid,lemniscate,semidisk} [--m <cusps>]\n";

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cout << kUsage;
        return args.empty() ? 2 : 0;
    }

    try {
        const slice::ExperimentConfig cfg = slice::parse_config(args);
        const slice::ExperimentResult result = slice::run_experiment(cfg);

        if (!cfg.out.empty()) {
            std::ofstream out(cfg.out, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.out << "\n";
                return 2;
            }
            out << result.csv;
            std::cout << result.summary;
        } else {
            std::cout << result.csv;
            if (result.summary != result.csv) std::cerr << result.summary;
        }
        return result.exit_code;
    } catch (const slice::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << kUsage;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
