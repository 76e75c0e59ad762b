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

// Brute-force 2^n statevector evolution used only to check the local
// representation. Shares nothing with the MPS engine except the gate
// matrices; its Schmidt spectra come from Eigen rather than mpsim::svd.

#include <cstddef>
#include <vector>

#include "mpsim/circuit.hpp"
#include "mpsim/gates.hpp"
#include "mpsim/mps_state.hpp"

namespace mpsim::oracle {

DenseState dense_zero(std::size_t n);

/// Throws CapacityError above dense_limit(), IndexError for a bad target.
DenseState dense_apply_1q(const DenseState &psi, const Gate1Q &gate);

/// Any pair of distinct targets; row index of the matrix is (i*2 + j) with
/// i the value of `gate.first`.
DenseState dense_apply_2q(const DenseState &psi, const Gate2Q &gate);

/// Singular values of the 2^l x 2^(n-l) amplitude matrix, descending.
std::vector<double> dense_schmidt(const DenseState &psi, std::size_t cut);

/// Runs a whole circuit from |0...0>.
DenseState dense_run(const Circuit &circuit);

void dense_apply_op(DenseState &psi, const CircuitOp &op);

/// <psi|O_1 (x) ... (x) O_n|psi> by explicit summation.
cplx dense_expect(const DenseState &psi, const std::vector<ComplexMatrix> &factors);

/// max_k |a_k - b_k|
double max_amplitude_deviation(const DenseState &a, const DenseState &b);

}  // namespace mpsim::oracle
