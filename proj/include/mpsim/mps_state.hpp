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

// Local (Gamma/lambda) representation of an n-qubit pure state:
//
//   c[i1..in] = sum_{a} G1[i1]_{a1} l1_{a1} G2[i2]_{a1 a2} l2_{a2} ... Gn[in]_{a(n-1)}
//
// Sites and bonds are 1-based: site l carries Gamma^[l], bond l sits between
// sites l and l+1 and carries lambda^[l], the Schmidt coefficients of the cut
// [1..l]:[l+1..n]. Bonds 0 and n are virtual with dimension 1.
//
// Bitstrings and dense amplitude indices are big-endian: qubit 1 is the
// leftmost character and the most significant bit.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpsim/numerics.hpp"

namespace mpsim {

/// Gamma^[l] stored as two (left_dim x right_dim) row-major slices, one per
/// physical index i in {0, 1}.
class GammaTensor {
  public:
    GammaTensor() = default;
    GammaTensor(std::size_t left_dim, std::size_t right_dim)
        : left_(left_dim), right_(right_dim), data_(2 * left_dim * right_dim) {
    }

    std::size_t left_dim() const noexcept {
        return left_;
    }
    std::size_t right_dim() const noexcept {
        return right_;
    }
    std::size_t slice_size() const noexcept {
        return left_ * right_;
    }

    cplx &operator()(std::size_t i, std::size_t a, std::size_t b) noexcept {
        return data_[(i * left_ + a) * right_ + b];
    }
    const cplx &operator()(std::size_t i, std::size_t a, std::size_t b) const noexcept {
        return data_[(i * left_ + a) * right_ + b];
    }

    cplx *slice(std::size_t i) noexcept {
        return data_.data() + i * slice_size();
    }
    const cplx *slice(std::size_t i) const noexcept {
        return data_.data() + i * slice_size();
    }

    std::span<cplx> data() noexcept {
        return data_;
    }
    std::span<const cplx> data() const noexcept {
        return data_;
    }

    /// True iff shapes match and every entry has the same bit pattern.
    bool bitwise_equal(const GammaTensor &other) const noexcept;

  private:
    std::size_t left_ = 1;
    std::size_t right_ = 1;
    std::vector<cplx> data_ = std::vector<cplx>(2);
};

/// Schmidt coefficients of one bond: strictly positive, descending.
struct LambdaVector {
    std::vector<double> values;

    std::size_t size() const noexcept {
        return values.size();
    }
    double operator[](std::size_t k) const noexcept {
        return values[k];
    }
    bool bitwise_equal(const LambdaVector &other) const noexcept;
};

/// 2^n amplitudes, big-endian (qubit 1 most significant).
struct DenseState {
    std::size_t n = 0;
    std::vector<cplx> amplitudes;

    static DenseState basis(std::size_t n, std::size_t index);
    double norm_sq() const noexcept;
};

/// Upper bound on n for dense conversions (to_dense, from_dense, oracle).
std::size_t dense_limit() noexcept;
void set_dense_limit(std::size_t n);

class MpsState {
  public:
    /// |0...0> on n qubits; throws DomainError for n == 0.
    static MpsState zero(std::size_t n, const TolerancePolicy &policy = {});

    std::size_t num_qubits() const noexcept {
        return gammas_.size();
    }

    const GammaTensor &gamma(std::size_t site) const;
    GammaTensor &mutable_gamma(std::size_t site);

    /// Bond l in [1, n-1].
    const LambdaVector &lambda(std::size_t bond) const;
    LambdaVector &mutable_lambda(std::size_t bond);

    /// Bond dimension chi_l for l in [0, n]; the virtual bonds 0 and n are 1.
    std::size_t bond_dim(std::size_t bond) const;

    /// lambda^[l] for l in [0, n], with the virtual bonds returning (1).
    std::span<const double> lambda_or_unit(std::size_t bond) const;

    const TolerancePolicy &policy() const noexcept {
        return policy_;
    }
    void set_policy(const TolerancePolicy &policy);

    /// Truncation cap applied inside two-qubit updates. Off by default.
    std::optional<std::size_t> chi_cap() const noexcept {
        return chi_cap_;
    }
    void set_chi_cap(std::optional<std::size_t> cap);

    /// Sum of squared Schmidt weight discarded by truncations so far.
    double truncation_weight() const noexcept {
        return truncation_weight_;
    }
    void add_truncation_weight(double w) noexcept {
        truncation_weight_ += w;
    }

    /// Raw constructor from tensors; checks only that bond dimensions chain.
    MpsState(std::vector<GammaTensor> gammas, std::vector<LambdaVector> lambdas, const TolerancePolicy &policy = {});

  private:
    std::vector<GammaTensor> gammas_;
    std::vector<LambdaVector> lambdas_;
    TolerancePolicy policy_;
    std::optional<std::size_t> chi_cap_;
    double truncation_weight_ = 0.0;
};

MpsState init_zero(std::size_t n, const TolerancePolicy &policy = {});

/// Chained Schmidt decompositions, left to right. Amplitudes are reproduced
/// exactly, global phase included. Throws NormalizationError if psi is not
/// normalized within canonical_tol and CapacityError above dense_limit().
MpsState from_dense(const DenseState &psi, const TolerancePolicy &policy = {});

/// Full contraction of the chain. Throws CapacityError above dense_limit().
DenseState to_dense(const MpsState &state);

/// lambda^[l] of the cut [1..l]:[l+1..n]. Throws IndexError unless 1 <= l <= n-1.
std::vector<double> schmidt_at_cut(const MpsState &state, std::size_t bond);

/// Largest bond dimension over the contiguous cuts.
std::size_t chi(const MpsState &state);

/// log2(chi).
double e_chi(const MpsState &state);

/// Exact number of stored parameters: Gamma entries plus lambda entries.
std::size_t storage_count(const MpsState &state);

struct CanonicalReport {
    /// Per site (index 0 is site 1): max deviation of the left-orthonormality
    /// identity sum_i (L G^i)^dag (L G^i) = I and of the right identity
    /// sum_i (G^i L)(G^i L)^dag = I.
    std::vector<double> left_deviation;
    std::vector<double> right_deviation;
    /// Per bond (index 0 is bond 1): |sum lambda^2 - 1|.
    std::vector<double> lambda_norm_deviation;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    /// 1-based sites whose identities exceed the tolerance.
    std::vector<std::size_t> failing_sites;
};

CanonicalReport validate_canonical(const MpsState &state);

/// <psi|psi> by transfer-matrix contraction, O(n chi^3).
double global_norm(const MpsState &state);

}  // namespace mpsim
