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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mpsim/errors.hpp"

namespace mpsim {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    /// Row-major entries; throws ShapeError when the count does not match.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries)
        : ComplexMatrix(rows, cols, std::vector<cplx>(entries)) {
    }

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const cplx> diag);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool empty() const noexcept {
        return data_.empty();
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    cplx &operator()(std::size_t r, std::size_t c) noexcept {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    std::span<cplx> data() noexcept {
        return data_;
    }
    std::span<const cplx> data() const noexcept {
        return data_;
    }

    bool all_finite() const noexcept;
    ComplexMatrix adjoint() const;
    double frobenius_norm() const noexcept;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest absolute entry of a - b; shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Thin SVD: m = left * diag(singulars) * right_dag, with k = min(rows, cols)
/// singular values sorted descending.
struct SvdResult {
    ComplexMatrix left;       // rows x k, orthonormal columns
    std::vector<double> singulars;
    ComplexMatrix right_dag;  // k x cols, orthonormal rows
};

struct TolerancePolicy {
    /// Singular values at or below rank_tol * largest are treated as zero.
    double rank_tol = 1e-12;
    double unitarity_tol = 1e-8;
    double canonical_tol = 1e-10;

    /// Throws DomainError unless every tolerance is positive and finite.
    void validate() const;
};

/// One-sided Jacobi SVD. Throws NumericInputError for empty or non-finite
/// input and NumericFailure if the sweeps do not converge.
SvdResult svd(const ComplexMatrix &m);

/// Number of singular values strictly above rank_tol * singulars[0].
/// Throws ContractViolation if the list is not descending and non-negative.
std::size_t effective_rank(std::span<const double> singulars, const TolerancePolicy &policy = {});

/// True iff max |m^dag m - I| <= unitarity_tol. Throws ShapeError for non-square m.
bool check_unitary(const ComplexMatrix &m, const TolerancePolicy &policy = {});

/// Max entry of |m - m^dag|; m must be square.
double hermitian_deviation(const ComplexMatrix &m);

}  // namespace mpsim
