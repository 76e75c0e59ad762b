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

#pragma once

// Circuit text format (one op per line, whitespace separated):
//
//   # comment to end of line
//   qubits N                     first non-comment line
//   h 0                          named gate, 0-based qubit indices
//   rz 0 1.5707963267948966      angles in radians
//   cx 0 1
//   u1 q  re im re im re im re im          raw 2x2, row-major
//   u2 q1 q2  <32 numbers>                 raw 4x4, row-major
//
// Mnemonics are case-insensitive. Indices are 0-based in text and 1-based in
// CircuitOp::qubits.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mpsim/gates.hpp"
#include "mpsim/numerics.hpp"

namespace mpsim {

struct CircuitOp {
    std::string name;                  // lowercase mnemonic
    std::vector<std::size_t> qubits;   // 1-based sites
    std::vector<double> params;        // angles for rx, ry, rz, p, cp
    ComplexMatrix raw;                 // only for u1 / u2

    bool is_two_qubit() const noexcept {
        return qubits.size() == 2;
    }
    friend bool operator==(const CircuitOp &, const CircuitOp &) = default;
};

struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<CircuitOp> ops;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

struct GateSpec {
    std::string_view name;
    std::size_t num_qubits;
    std::size_t num_params;
};

/// Named gates in the library, excluding the raw u1/u2 forms.
const std::vector<GateSpec> &gate_library();

/// Standard matrix for a named gate. rz(t) = diag(e^{-it/2}, e^{it/2}) and
/// rx, ry likewise exp(-i t sigma / 2). Two-qubit matrices use the first
/// listed qubit as the high index bit (cx: first = control).
/// Throws GateError for unknown names or a wrong number of parameters.
ComplexMatrix builtin_gate(std::string_view mnemonic, const std::vector<double> &params = {});

/// Matrix for an op (builtin or raw).
ComplexMatrix op_matrix(const CircuitOp &op);

/// Throws ParseError carrying a 1-based line number.
Circuit parse_circuit(std::string_view text, const TolerancePolicy &policy = {});

/// Canonical text form; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const Circuit &circuit);

/// Applies one op to an MPS state (swap-routed if needed).
void apply_op(MpsState &state, const CircuitOp &op);

}  // namespace mpsim
