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

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "mpsim/cli.hpp"
#include "mpsim/dense_oracle.hpp"

namespace mpsim::cli {

ChiLimitExceeded::ChiLimitExceeded(std::size_t gate_index, std::size_t chi, std::size_t limit)
    : CapacityError("bond dimension " + std::to_string(chi) + " exceeds --max-chi " + std::to_string(limit) +
                    " after gate " + std::to_string(gate_index)),
      gate_index_(gate_index) {
}

RunReport run_circuit(const Circuit &circuit, const RunOptions &options) {
    if (options.compare_dense && circuit.num_qubits > dense_limit()) {
        throw CapacityError("--compare-dense supports at most " + std::to_string(dense_limit()) + " qubits, circuit has " +
                            std::to_string(circuit.num_qubits));
    }
    TolerancePolicy policy;
    if (options.rank_tol) {
        policy.rank_tol = *options.rank_tol;
    }
    MpsState state = init_zero(circuit.num_qubits, policy);
    state.set_chi_cap(options.chi_cap);

    RunReport rep;
    rep.num_qubits = circuit.num_qubits;
    rep.records.reserve(circuit.ops.size());
    rep.peak_storage_count = storage_count(state);
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < circuit.ops.size(); ++k) {
        const CircuitOp &op = circuit.ops[k];
        apply_op(state, op);
        const auto now = std::chrono::steady_clock::now();
        GateRecord rec;
        rec.index = k;
        rec.name = op.name;
        for (std::size_t q : op.qubits) {
            rec.targets.push_back(q - 1);
        }
        rec.max_chi = chi(state);
        rec.e_chi = std::log2(static_cast<double>(rec.max_chi));
        rec.wall_s = std::chrono::duration<double>(now - t0).count();
        rep.records.push_back(std::move(rec));
        rep.peak_storage_count = std::max(rep.peak_storage_count, storage_count(state));
        if (options.max_chi && rep.records.back().max_chi > *options.max_chi) {
            throw ChiLimitExceeded(k, rep.records.back().max_chi, *options.max_chi);
        }
    }
    rep.final_chi = chi(state);
    rep.final_e_chi = e_chi(state);
    rep.storage_count = storage_count(state);
    rep.truncation_weight = state.truncation_weight();
    if (options.report_chi) {
        for (std::size_t b = 1; b < state.num_qubits(); ++b) {
            rep.schmidt.push_back(schmidt_at_cut(state, b));
        }
    }
    for (const std::string &bits : options.amplitudes) {
        rep.amplitudes.emplace_back(bits, amplitude(state, bits));
    }
    for (const std::string &p : options.expectations) {
        rep.expectations.emplace_back(p, expect_product(state, ProductObservable::pauli(p)));
    }
    if (options.shots) {
        rep.samples = sample(state, *options.shots, options.seed);
    }
    if (options.compare_dense) {
        rep.dense_deviation = oracle::max_amplitude_deviation(to_dense(state), oracle::dense_run(circuit));
    }
    return rep;
}

void write_json(std::ostream &out, const RunReport &rep, const RunOptions &options) {
    using nlohmann::json;
    for (const GateRecord &r : rep.records) {
        json j{{"type", "gate"},       {"index", r.index},     {"op", r.name},
               {"targets", r.targets}, {"max_chi", r.max_chi}, {"e_chi", r.e_chi}};
        if (options.timing) {
            j["wall_s"] = r.wall_s;
        }
        out << j.dump() << '\n';
    }
    json s{{"type", "summary"},
           {"qubits", rep.num_qubits},
           {"gates", rep.records.size()},
           {"final_chi", rep.final_chi},
           {"e_chi", rep.final_e_chi},
           {"storage_count", rep.storage_count},
           {"peak_storage_count", rep.peak_storage_count},
           {"truncation_weight", rep.truncation_weight}};
    if (options.timing) {
        s["wall_s"] = rep.records.empty() ? 0.0 : rep.records.back().wall_s;
    }
    if (!rep.schmidt.empty()) {
        s["schmidt"] = rep.schmidt;
    }
    if (!rep.amplitudes.empty()) {
        json a = json::array();
        for (const auto &[bits, z] : rep.amplitudes) {
            a.push_back({{"bits", bits}, {"re", z.real()}, {"im", z.imag()}});
        }
        s["amplitudes"] = a;
    }
    if (!rep.expectations.empty()) {
        json e = json::array();
        for (const auto &[pauli, v] : rep.expectations) {
            e.push_back({{"pauli", pauli}, {"value", v}});
        }
        s["expectations"] = e;
    }
    if (rep.samples) {
        s["samples"] = {{"shots", rep.samples->shots},
                        {"seed", rep.samples->seed},
                        {"rng", rep.samples->rng},
                        {"counts", rep.samples->counts}};
    }
    if (rep.dense_deviation) {
        s["compare_dense"] = {{"max_amplitude_deviation", *rep.dense_deviation}};
    }
    out << s.dump() << '\n';
}

void write_text(std::ostream &out, const RunReport &rep, const RunOptions &options) {
    const auto flags = out.flags();
    if (options.report_chi) {
        out << "gate  op      targets    chi  E_chi     wall_s\n";
        for (const GateRecord &r : rep.records) {
            std::string targets;
            for (std::size_t t : r.targets) {
                targets += (targets.empty() ? "" : ",") + std::to_string(t);
            }
            out << std::left << std::setw(6) << r.index << std::setw(8) << r.name << std::setw(11) << targets
                << std::right << std::setw(4) << r.max_chi << "  " << std::fixed << std::setprecision(4)
                << std::setw(6) << r.e_chi << "  " << std::scientific << std::setprecision(3) << r.wall_s << '\n';
            out.flags(flags);
        }
    }
    out << "qubits:             " << rep.num_qubits << '\n';
    out << "gates:              " << rep.records.size() << '\n';
    out << "final chi:          " << rep.final_chi << '\n';
    out << "E_chi:              " << rep.final_e_chi << '\n';
    out << "storage count:      " << rep.storage_count << '\n';
    out << "peak storage count: " << rep.peak_storage_count << '\n';
    if (rep.truncation_weight > 0.0) {
        out << "truncation weight:  " << rep.truncation_weight << '\n';
    }
    if (!rep.records.empty()) {
        out << "wall time (s):      " << rep.records.back().wall_s << '\n';
    }
    if (!rep.schmidt.empty()) {
        out << std::setprecision(12);
        for (std::size_t b = 0; b < rep.schmidt.size(); ++b) {
            out << "lambda[" << b + 1 << "]:";
            for (double x : rep.schmidt[b]) {
                out << ' ' << x;
            }
            out << '\n';
        }
        out.flags(flags);
    }
    out << std::setprecision(15);
    for (const auto &[bits, z] : rep.amplitudes) {
        out << "amplitude " << bits << ": " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
            << "i\n";
    }
    for (const auto &[pauli, v] : rep.expectations) {
        out << "<" << pauli << ">: " << v << '\n';
    }
    if (rep.samples) {
        out << "samples (" << rep.samples->shots << " shots, seed " << rep.samples->seed << ", "
            << rep.samples->rng << "):\n";
        for (const auto &[bits, count] : rep.samples->counts) {
            out << "  " << bits << ' ' << count << '\n';
        }
    }
    if (rep.dense_deviation) {
        out << "max |mps - dense| amplitude deviation: " << std::scientific << std::setprecision(3)
            << *rep.dense_deviation << '\n';
    }
    out.flags(flags);
    out << std::setprecision(6);
}

}  // namespace mpsim::cli
