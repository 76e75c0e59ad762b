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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "mpsim/circuit.hpp"

namespace mpsim {
namespace {

constexpr cplx kI{0.0, 1.0};

ComplexMatrix diag2(cplx a, cplx b) {
    return ComplexMatrix(2, 2, {a, 0, 0, b});
}

}  // namespace

const std::vector<GateSpec> &gate_library() {
    static const std::vector<GateSpec> lib{
        {"i", 1, 0},  {"x", 1, 0},  {"y", 1, 0},  {"z", 1, 0},   {"h", 1, 0},  {"s", 1, 0},
        {"sdg", 1, 0}, {"t", 1, 0}, {"tdg", 1, 0}, {"rx", 1, 1}, {"ry", 1, 1}, {"rz", 1, 1},
        {"p", 1, 1},  {"cx", 2, 0}, {"cz", 2, 0},  {"cp", 2, 1}, {"swap", 2, 0},
    };
    return lib;
}

ComplexMatrix builtin_gate(std::string_view mnemonic, const std::vector<double> &params) {
    std::string name(mnemonic);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    const auto &lib = gate_library();
    const auto it = std::find_if(lib.begin(), lib.end(), [&](const GateSpec &g) { return g.name == name; });
    if (it == lib.end()) {
        throw GateError("unknown gate '" + name + "'");
    }
    if (params.size() != it->num_params) {
        throw GateError("gate '" + name + "' takes " + std::to_string(it->num_params) + " parameter(s)");
    }
    const double th = params.empty() ? 0.0 : params[0];
    const double c = std::cos(th / 2);
    const double s = std::sin(th / 2);
    const double r2 = std::numbers::sqrt2 / 2;

    if (name == "i") return ComplexMatrix::identity(2);
    if (name == "x") return ComplexMatrix(2, 2, {0, 1, 1, 0});
    if (name == "y") return ComplexMatrix(2, 2, {0, -kI, kI, 0});
    if (name == "z") return diag2(1, -1);
    if (name == "h") return ComplexMatrix(2, 2, {r2, r2, r2, -r2});
    if (name == "s") return diag2(1, kI);
    if (name == "sdg") return diag2(1, -kI);
    if (name == "t") return diag2(1, std::polar(1.0, std::numbers::pi / 4));
    if (name == "tdg") return diag2(1, std::polar(1.0, -std::numbers::pi / 4));
    if (name == "rx") return ComplexMatrix(2, 2, {c, -kI * s, -kI * s, c});
    if (name == "ry") return ComplexMatrix(2, 2, {c, -s, s, c});
    if (name == "rz") return diag2(std::polar(1.0, -th / 2), std::polar(1.0, th / 2));
    if (name == "p") return diag2(1, std::polar(1.0, th));
    if (name == "cx") return ComplexMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    if (name == "cz") return ComplexMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    if (name == "swap") return ComplexMatrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    // cp
    return ComplexMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, std::polar(1.0, th)});
}

ComplexMatrix op_matrix(const CircuitOp &op) {
    if (op.name == "u1" || op.name == "u2") {
        return op.raw;
    }
    return builtin_gate(op.name, op.params);
}

void apply_op(MpsState &state, const CircuitOp &op) {
    ComplexMatrix m = op_matrix(op);
    if (op.qubits.size() == 1) {
        apply_1q(state, Gate1Q(std::move(m), op.qubits[0], state.policy()));
    } else if (op.qubits.size() == 2) {
        apply_2q(state, Gate2Q(std::move(m), op.qubits[0], op.qubits[1], state.policy()));
    } else {
        throw GateError("op '" + op.name + "' must act on one or two qubits");
    }
}

}  // namespace mpsim
