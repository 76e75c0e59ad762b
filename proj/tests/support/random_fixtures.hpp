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

// Random states, unitaries and circuits shared by the test binaries.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mpsim/circuit.hpp"
#include "mpsim/mps_state.hpp"
#include "mpsim/numerics.hpp"

namespace mpsim::testing {

inline cplx gaussian_cplx(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    const double re = g(rng);
    return {re, g(rng)};
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    ComplexMatrix m(rows, cols);
    for (cplx &z : m.data()) {
        z = gaussian_cplx(rng);
    }
    return m;
}

/// Modified Gram-Schmidt on the columns of a Gaussian matrix, two passes.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    ComplexMatrix m = random_matrix(dim, dim, rng);
    for (std::size_t c = 0; c < dim; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                cplx d = 0.0;
                for (std::size_t r = 0; r < dim; ++r) {
                    d += std::conj(m(r, p)) * m(r, c);
                }
                for (std::size_t r = 0; r < dim; ++r) {
                    m(r, c) -= d * m(r, p);
                }
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            nrm += std::norm(m(r, c));
        }
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, c) /= nrm;
        }
    }
    return m;
}

inline DenseState random_dense(std::size_t n, std::mt19937_64 &rng) {
    DenseState psi;
    psi.n = n;
    psi.amplitudes.resize(std::size_t{1} << n);
    double nrm = 0.0;
    for (cplx &z : psi.amplitudes) {
        z = gaussian_cplx(rng);
        nrm += std::norm(z);
    }
    nrm = std::sqrt(nrm);
    for (cplx &z : psi.amplitudes) {
        z /= nrm;
    }
    return psi;
}

inline std::size_t uniform_index(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random op from {h, t, rz, cx, cz, swap}; two-qubit targets are any
/// distinct pair, in either order.
inline CircuitOp random_basic_op(std::size_t n, std::mt19937_64 &rng) {
    static const char *const names[] = {"h", "t", "rz", "cx", "cz", "swap"};
    CircuitOp op;
    const std::size_t pick = uniform_index(rng, 0, n >= 2 ? 5 : 2);
    op.name = names[pick];
    const std::size_t a = uniform_index(rng, 1, n);
    op.qubits.push_back(a);
    if (pick >= 3) {
        std::size_t b = uniform_index(rng, 1, n - 1);
        if (b >= a) {
            ++b;
        }
        op.qubits.push_back(b);
    }
    if (op.name == "rz") {
        op.params.push_back(std::uniform_real_distribution<double>(-M_PI, M_PI)(rng));
    }
    return op;
}

/// depth layers of n/2 random ops each (at least one per layer).
inline Circuit random_basic_circuit(std::size_t n, std::size_t depth, std::mt19937_64 &rng) {
    Circuit c{n, {}};
    const std::size_t per_layer = std::max<std::size_t>(1, n / 2);
    for (std::size_t d = 0; d < depth; ++d) {
        for (std::size_t k = 0; k < per_layer; ++k) {
            c.ops.push_back(random_basic_op(n, rng));
        }
    }
    return c;
}

/// Random op including raw u1 / u2 gates and every parametrized mnemonic.
inline CircuitOp random_any_op(std::size_t n, std::mt19937_64 &rng) {
    static const char *const one[] = {"i", "x", "y", "z", "h", "s", "sdg", "t", "tdg", "rx", "ry", "rz", "p", "u1"};
    static const char *const two[] = {"cx", "cz", "cp", "swap", "u2"};
    CircuitOp op;
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    const bool pair = n >= 2 && uniform_index(rng, 0, 1) == 1;
    const std::size_t a = uniform_index(rng, 1, n);
    op.qubits.push_back(a);
    if (pair) {
        op.name = two[uniform_index(rng, 0, 4)];
        std::size_t b = uniform_index(rng, 1, n - 1);
        if (b >= a) {
            ++b;
        }
        op.qubits.push_back(b);
    } else {
        op.name = one[uniform_index(rng, 0, 13)];
    }
    if (op.name == "rx" || op.name == "ry" || op.name == "rz" || op.name == "p" || op.name == "cp") {
        op.params.push_back(angle(rng));
    }
    if (op.name == "u1") {
        op.raw = random_unitary(2, rng);
    } else if (op.name == "u2") {
        op.raw = random_unitary(4, rng);
    }
    return op;
}

inline Circuit random_any_circuit(std::size_t n, std::size_t gates, std::mt19937_64 &rng) {
    Circuit c{n, {}};
    for (std::size_t k = 0; k < gates; ++k) {
        c.ops.push_back(random_any_op(n, rng));
    }
    return c;
}

/// Brickwork of random u2 gates on neighbouring qubits.
inline Circuit random_brickwork(std::size_t n, std::size_t depth, std::mt19937_64 &rng) {
    Circuit c{n, {}};
    for (std::size_t layer = 0; layer < depth; ++layer) {
        for (std::size_t q = 1 + layer % 2; q + 1 <= n; q += 2) {
            CircuitOp op;
            op.name = "u2";
            op.qubits = {q, q + 1};
            op.raw = random_unitary(4, rng);
            c.ops.push_back(std::move(op));
        }
    }
    return c;
}

/// MPS evolved from |0..0> by a random circuit.
inline MpsState random_evolved(std::size_t n, std::size_t gates, std::mt19937_64 &rng) {
    MpsState s = init_zero(n);
    for (const CircuitOp &op : random_any_circuit(n, gates, rng).ops) {
        apply_op(s, op);
    }
    return s;
}

inline std::string random_bits(std::size_t n, std::mt19937_64 &rng) {
    std::string s(n, '0');
    for (char &c : s) {
        c = uniform_index(rng, 0, 1) ? '1' : '0';
    }
    return s;
}

}  // namespace mpsim::testing
