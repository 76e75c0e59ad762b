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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mpsim/mps_state.hpp"

namespace mpsim {

/// O_1 (x) ... (x) O_n with Hermitian 2x2 factors; index 0 is qubit 1.
class ProductObservable {
  public:
    /// Throws ObservableError unless every factor is a 2x2 Hermitian matrix
    /// (within 1e-10).
    explicit ProductObservable(std::vector<ComplexMatrix> factors);

    /// Pauli string over {I, X, Y, Z} (case-insensitive), qubit 1 leftmost.
    static ProductObservable pauli(std::string_view pauli_string);

    std::size_t size() const noexcept {
        return factors_.size();
    }
    const ComplexMatrix &factor(std::size_t k) const noexcept {
        return factors_[k];
    }

  private:
    std::vector<ComplexMatrix> factors_;
};

struct Expectation {
    double value = 0.0;
    double imag_residue = 0.0;
};

/// <psi|O|psi> by left-to-right transfer contraction, linear in n.
/// Writes a warning to stderr when the imaginary residue exceeds 1e-8.
double expect_product(const MpsState &state, const ProductObservable &obs);
Expectation expect_product_detailed(const MpsState &state, const ProductObservable &obs);

/// c_{i1..in} for a big-endian bitstring of '0'/'1'. Throws ObservableError
/// for a wrong length or a non-binary character.
cplx amplitude(const MpsState &state, std::string_view bits);

struct SampleResult {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string rng = "mt19937_64";
};

/// Chain-rule sampling from |c|^2: qubit 1 first, each conditional computed
/// from the left environment and the next bond's lambda. Deterministic in
/// `seed`. Throws DomainError for shots == 0.
SampleResult sample(const MpsState &state, std::uint64_t shots, std::uint64_t seed);

}  // namespace mpsim
