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

#include <cstddef>

#include "mpsim/mps_state.hpp"
#include "mpsim/numerics.hpp"

namespace mpsim {

/// 2x2 unitary acting on a 1-based qubit.
struct Gate1Q {
    ComplexMatrix matrix;
    std::size_t target = 1;

    /// Throws GateError unless the matrix is a 2x2 unitary under `policy`.
    Gate1Q(ComplexMatrix m, std::size_t target, const TolerancePolicy &policy = {});
};

/// 4x4 unitary on an ordered pair of 1-based qubits. Row/column index is
/// (i * 2 + j) where i is the outcome of `first` and j the outcome of `second`.
struct Gate2Q {
    ComplexMatrix matrix;
    std::size_t first = 1;
    std::size_t second = 2;

    /// Throws GateError for a non-unitary matrix or identical targets.
    Gate2Q(ComplexMatrix m, std::size_t first, std::size_t second, const TolerancePolicy &policy = {});

    /// Same gate with the target order reversed (matrix conjugated by SWAP).
    Gate2Q reversed() const;
};

/// Two-site tensor Theta^{ij}_{alpha gamma} before refactorization: rows
/// (alpha, i), columns (j, gamma), row-major.
struct ThetaTensor {
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
    std::vector<cplx> data;

    cplx &operator()(std::size_t a, std::size_t i, std::size_t j, std::size_t g) noexcept {
        return data[(a * 2 + i) * (2 * right_dim) + j * right_dim + g];
    }
    const cplx &operator()(std::size_t a, std::size_t i, std::size_t j, std::size_t g) const noexcept {
        return data[(a * 2 + i) * (2 * right_dim) + j * right_dim + g];
    }
};

/// Theta = V applied to Gamma^[l] lambda^[l] Gamma^[l+1]; `v` is indexed with
/// i for site l and j for site l+1.
ThetaTensor form_theta(const MpsState &state, std::size_t site, const ComplexMatrix &v);

/// Updates Gamma^[target] only: Gamma'[i] = sum_j U_ij Gamma[j].
void apply_1q(MpsState &state, const Gate1Q &gate);

/// Two-qubit gate on adjacent sites (site, site+1). `gate.matrix` is indexed
/// with i for `site`. Touches only Gamma^[site], lambda^[site], Gamma^[site+1].
/// Applies the state's chi cap, if set, right after the SVD.
void apply_2q_adjacent(MpsState &state, std::size_t site, const ComplexMatrix &gate);

enum class Routing {
    /// Move the lower-positioned qubit up next to the higher one (default).
    MoveLower,
    /// Move the higher-positioned qubit down next to the lower one.
    MoveUpper,
};

/// Arbitrary pair: swap-routes to adjacency, applies, routes back. Returns
/// the number of adjacent SWAPs performed, 2 * (|first - second| - 1).
std::size_t apply_2q(MpsState &state, const Gate2Q &gate, Routing routing = Routing::MoveLower);

/// Keeps the `cap` largest Schmidt values of bond l and renormalizes.
/// Returns the discarded weight sum of dropped lambda^2 (before renormalizing).
double truncate_bond(MpsState &state, std::size_t bond, std::size_t cap);

}  // namespace mpsim
