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
#include <charconv>
#include <cmath>
#include <string>

#include "mpsim/circuit.hpp"

namespace mpsim {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        const std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        if (k > start) {
            out.push_back(line.substr(start, k - start));
        }
    }
    return out;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char *what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    }
    return value;
}

double parse_real(std::string_view tok, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
        throw ParseError(line, "malformed number '" + std::string(tok) + "'");
    }
    return value;
}

void append_real(std::string &out, double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    out.append(buf, ptr);
}

}  // namespace

Circuit parse_circuit(std::string_view text, const TolerancePolicy &policy) {
    Circuit circuit;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::vector<std::string_view> tok = tokenize(line);
        if (tok.empty()) {
            continue;
        }
        const std::string head = lower(tok[0]);

        if (!have_header) {
            if (head != "qubits" || tok.size() != 2) {
                throw ParseError(line_no, "expected 'qubits N' header before any gate");
            }
            circuit.num_qubits = parse_count(tok[1], line_no, "qubit count");
            if (circuit.num_qubits == 0) {
                throw ParseError(line_no, "qubit count must be at least 1");
            }
            have_header = true;
            continue;
        }
        if (head == "qubits") {
            throw ParseError(line_no, "duplicate 'qubits' header");
        }

        std::size_t nq = 0;
        std::size_t np = 0;
        if (head == "u1") {
            nq = 1;
            np = 8;
        } else if (head == "u2") {
            nq = 2;
            np = 32;
        } else {
            const auto &lib = gate_library();
            const auto it = std::find_if(lib.begin(), lib.end(), [&](const GateSpec &g) { return g.name == head; });
            if (it == lib.end()) {
                throw ParseError(line_no, "unknown gate '" + std::string(tok[0]) + "'");
            }
            nq = it->num_qubits;
            np = it->num_params;
        }
        if (tok.size() != 1 + nq + np) {
            throw ParseError(line_no, "gate '" + head + "' expects " + std::to_string(nq) + " qubit index(es) and " +
                                          std::to_string(np) + " number(s), got " + std::to_string(tok.size() - 1) +
                                          " token(s)");
        }

        CircuitOp op;
        op.name = head;
        for (std::size_t q = 0; q < nq; ++q) {
            const std::size_t idx = parse_count(tok[1 + q], line_no, "qubit index");
            if (idx >= circuit.num_qubits) {
                throw ParseError(line_no, "qubit index " + std::to_string(idx) + " out of range for " +
                                              std::to_string(circuit.num_qubits) + " qubit(s)");
            }
            op.qubits.push_back(idx + 1);
        }
        if (nq == 2 && op.qubits[0] == op.qubits[1]) {
            throw ParseError(line_no, "two-qubit gate targets must be distinct");
        }
        std::vector<double> nums;
        nums.reserve(np);
        for (std::size_t k = 0; k < np; ++k) {
            nums.push_back(parse_real(tok[1 + nq + k], line_no));
        }
        if (head == "u1" || head == "u2") {
            const std::size_t dim = head == "u1" ? 2 : 4;
            std::vector<cplx> entries(dim * dim);
            for (std::size_t e = 0; e < entries.size(); ++e) {
                entries[e] = {nums[2 * e], nums[2 * e + 1]};
            }
            op.raw = ComplexMatrix(dim, dim, std::move(entries));
            if (!check_unitary(op.raw, policy)) {
                throw ParseError(line_no, head + " matrix is not unitary");
            }
        } else {
            op.params = std::move(nums);
        }
        circuit.ops.push_back(std::move(op));
    }
    if (!have_header) {
        throw ParseError(std::max<std::size_t>(line_no, 1), "missing 'qubits N' header");
    }
    return circuit;
}

std::string render_circuit(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits) + "\n";
    for (const CircuitOp &op : circuit.ops) {
        out += op.name;
        for (std::size_t q : op.qubits) {
            out += ' ';
            out += std::to_string(q - 1);
        }
        if (op.name == "u1" || op.name == "u2") {
            for (const cplx &z : op.raw.data()) {
                out += ' ';
                append_real(out, z.real());
                out += ' ';
                append_real(out, z.imag());
            }
        } else {
            for (double p : op.params) {
                out += ' ';
                append_real(out, p);
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace mpsim
