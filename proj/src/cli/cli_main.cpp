// Copyright 2026 The mpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mpsim/cli.hpp"

namespace mpsim::cli {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open circuit file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::size_t> parse_sizes(const std::string &list) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || v == 0) {
            throw CLI::ValidationError("--sizes", "'" + item + "' is not a positive integer");
        }
        sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) {
        throw CLI::ValidationError("--sizes", "empty size list");
    }
    return sizes;
}

}  // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Matrix-product-state quantum circuit simulator", "mpsim"};
    app.require_subcommand(1);

    RunOptions ropt;
    std::string circuit_path;
    bool run_json = false;
    std::uint64_t shots = 0;
    std::size_t chi_cap = 0;
    double rank_tol = 0.0;
    std::size_t max_chi = 0;
    CLI::App *run = app.add_subcommand("run", "Simulate a circuit file from |0...0>");
    run->add_option("--circuit", circuit_path, "Circuit file")->required();
    run->add_flag("--report-chi", ropt.report_chi, "Per-gate chi / E_chi table and final Schmidt spectra");
    run->add_option("--amplitude", ropt.amplitudes, "Amplitude of a bitstring (qubit 0 leftmost); repeatable");
    run->add_option("--expect", ropt.expectations, "Expectation of a Pauli string over IXYZ; repeatable");
    auto *shots_opt = run->add_option("--shots", shots, "Number of measurement shots")->check(CLI::PositiveNumber);
    run->add_option("--seed", ropt.seed, "Sampling seed (default 0)");
    auto *cap_opt = run->add_option("--chi-cap", chi_cap, "Truncate bonds to this dimension")->check(CLI::PositiveNumber);
    auto *tol_opt = run->add_option("--rank-tol", rank_tol, "Relative singular-value cutoff")->check(CLI::PositiveNumber);
    auto *max_opt =
        run->add_option("--max-chi", max_chi, "Fail with exit 3 once chi exceeds this")->check(CLI::PositiveNumber);
    run->add_flag("--compare-dense", ropt.compare_dense, "Cross-check amplitudes against the dense simulator");
    run->add_flag("--json", run_json, "Line-delimited JSON output");
    run->add_flag("--timing", ropt.timing, "Include wall-clock fields in JSON output");

    BenchOptions bopt;
    std::string sizes;
    bool bench_json = false;
    std::size_t bench_cap = 0;
    CLI::App *bench_cmd = app.add_subcommand("bench", "Scaling benchmark over generated workloads");
    bench_cmd->add_option("--family", bopt.family, "ghz | product | random-local")->required();
    bench_cmd->add_option("--sizes", sizes, "Comma-separated qubit counts")->required();
    auto *bcap_opt =
        bench_cmd->add_option("--chi-cap", bench_cap, "Bond-dimension cap")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--depth", bopt.depth, "random-local brickwork depth");
    bench_cmd->add_option("--seed", bopt.seed, "random-local seed");
    bench_cmd->add_flag("--json", bench_json, "Line-delimited JSON output");

    try {
        app.parse(argc, argv);
        if (bench_cmd->parsed()) {
            bopt.sizes = parse_sizes(sizes);
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (*shots_opt) {
                ropt.shots = shots;
            }
            if (*cap_opt) {
                ropt.chi_cap = chi_cap;
            }
            if (*tol_opt) {
                ropt.rank_tol = rank_tol;
            }
            if (*max_opt) {
                ropt.max_chi = max_chi;
            }
            TolerancePolicy policy;
            if (ropt.rank_tol) {
                policy.rank_tol = *ropt.rank_tol;
            }
            const std::string text = read_file(circuit_path);
            Circuit circuit;
            try {
                circuit = parse_circuit(text, policy);
            } catch (const ParseError &e) {
                err << "mpsim: " << circuit_path << ": " << e.what() << '\n';
                return kExitParse;
            }
            const RunReport report = run_circuit(circuit, ropt);
            if (run_json) {
                write_json(out, report, ropt);
            } else {
                write_text(out, report, ropt);
            }
        } else {
            if (*bcap_opt) {
                bopt.chi_cap = bench_cap;
            }
            const auto rows = mpsim::cli::bench(bopt);
            if (bench_json) {
                write_bench_json(out, rows, bopt);
            } else {
                write_bench_text(out, rows, bopt);
            }
        }
    } catch (const ChiLimitExceeded &e) {
        err << "mpsim: capacity exceeded at gate " << e.gate_index() << ": " << e.what() << '\n';
        return kExitCapacity;
    } catch (const CapacityError &e) {
        err << "mpsim: capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const Error &e) {
        err << "mpsim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure &e) {
        err << "mpsim: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace mpsim::cli
