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
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "mpsim/dense_oracle.hpp"

namespace mpsim::oracle {
namespace {

void check_capacity(std::size_t n) {
    if (n > dense_limit()) {
        throw CapacityError("dense oracle: " + std::to_string(n) + " qubits exceeds the dense limit of " +
                            std::to_string(dense_limit()));
    }
}

void check_target(const DenseState &psi, std::size_t q) {
    if (q < 1 || q > psi.n) {
        throw IndexError("dense oracle: qubit " + std::to_string(q) + " out of range");
    }
}

// Qubit q (1-based) is bit n - q of the amplitude index.
std::size_t mask_of(std::size_t n, std::size_t q) {
    return std::size_t{1} << (n - q);
}

}  // namespace

DenseState dense_zero(std::size_t n) {
    return DenseState::basis(n, 0);
}

DenseState dense_apply_1q(const DenseState &psi, const Gate1Q &gate) {
    check_capacity(psi.n);
    check_target(psi, gate.target);
    DenseState out = psi;
    const std::size_t m = mask_of(psi.n, gate.target);
    const ComplexMatrix &u = gate.matrix;
    for (std::size_t idx = 0; idx < out.amplitudes.size(); ++idx) {
        if (idx & m) {
            continue;
        }
        const cplx a0 = psi.amplitudes[idx];
        const cplx a1 = psi.amplitudes[idx | m];
        out.amplitudes[idx] = u(0, 0) * a0 + u(0, 1) * a1;
        out.amplitudes[idx | m] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return out;
}

DenseState dense_apply_2q(const DenseState &psi, const Gate2Q &gate) {
    check_capacity(psi.n);
    check_target(psi, gate.first);
    check_target(psi, gate.second);
    if (gate.first == gate.second) {
        throw GateError("dense oracle: identical targets");
    }
    DenseState out = psi;
    const std::size_t m1 = mask_of(psi.n, gate.first);
    const std::size_t m2 = mask_of(psi.n, gate.second);
    const ComplexMatrix &v = gate.matrix;
    for (std::size_t idx = 0; idx < out.amplitudes.size(); ++idx) {
        if ((idx & m1) || (idx & m2)) {
            continue;
        }
        const std::size_t slot[4] = {idx, idx | m2, idx | m1, idx | m1 | m2};
        cplx in[4];
        for (std::size_t k = 0; k < 4; ++k) {
            in[k] = psi.amplitudes[slot[k]];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            cplx acc{};
            for (std::size_t c = 0; c < 4; ++c) {
                acc += v(r, c) * in[c];
            }
            out.amplitudes[slot[r]] = acc;
        }
    }
    return out;
}

std::vector<double> dense_schmidt(const DenseState &psi, std::size_t cut) {
    check_capacity(psi.n);
    if (cut < 1 || cut >= psi.n) {
        throw IndexError("dense_schmidt: cut " + std::to_string(cut) + " outside [1, n-1]");
    }
    const Eigen::Index rows = Eigen::Index{1} << cut;
    const Eigen::Index cols = Eigen::Index{1} << (psi.n - cut);
    // Amplitudes are big-endian, so row = first `cut` qubits, column = rest.
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = psi.amplitudes[static_cast<std::size_t>(r * cols + c)];
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> f(m);
    const Eigen::VectorXd &s = f.singularValues();
    std::vector<double> out(s.data(), s.data() + s.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

void dense_apply_op(DenseState &psi, const CircuitOp &op) {
    ComplexMatrix m = op_matrix(op);
    if (op.qubits.size() == 1) {
        psi = dense_apply_1q(psi, Gate1Q(std::move(m), op.qubits[0]));
    } else {
        psi = dense_apply_2q(psi, Gate2Q(std::move(m), op.qubits[0], op.qubits[1]));
    }
}

DenseState dense_run(const Circuit &circuit) {
    DenseState psi = dense_zero(circuit.num_qubits);
    for (const CircuitOp &op : circuit.ops) {
        dense_apply_op(psi, op);
    }
    return psi;
}

cplx dense_expect(const DenseState &psi, const std::vector<ComplexMatrix> &factors) {
    if (factors.size() != psi.n) {
        throw ObservableError("dense_expect: factor count differs from qubit count");
    }
    // Apply each factor as a (possibly non-unitary) single-qubit map.
    DenseState phi = psi;
    for (std::size_t q = 1; q <= psi.n; ++q) {
        const ComplexMatrix &o = factors[q - 1];
        const std::size_t m = mask_of(psi.n, q);
        for (std::size_t idx = 0; idx < phi.amplitudes.size(); ++idx) {
            if (idx & m) {
                continue;
            }
            const cplx a0 = phi.amplitudes[idx];
            const cplx a1 = phi.amplitudes[idx | m];
            phi.amplitudes[idx] = o(0, 0) * a0 + o(0, 1) * a1;
            phi.amplitudes[idx | m] = o(1, 0) * a0 + o(1, 1) * a1;
        }
    }
    cplx acc{};
    for (std::size_t k = 0; k < psi.amplitudes.size(); ++k) {
        acc += std::conj(psi.amplitudes[k]) * phi.amplitudes[k];
    }
    return acc;
}

double max_amplitude_deviation(const DenseState &a, const DenseState &b) {
    if (a.amplitudes.size() != b.amplitudes.size()) {
        throw ShapeError("max_amplitude_deviation: sizes differ");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.amplitudes.size(); ++k) {
        worst = std::max(worst, std::abs(a.amplitudes[k] - b.amplitudes[k]));
    }
    return worst;
}

}  // namespace mpsim::oracle
