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

#include "mpsim/numerics.hpp"

namespace mpsim {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw ShapeError("ComplexMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(data_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(),
                       [](const cplx &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (const cplx &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matrix product: inner dimensions differ");
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const cplx aip = a(i, p);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aip * b(p, j);
            }
        }
    }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("matrix difference: shapes differ");
    }
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        c.data()[k] = a.data()[k] - b.data()[k];
    }
    return c;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("max_abs_diff: shapes differ");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    }
    return worst;
}

void TolerancePolicy::validate() const {
    for (double t : {rank_tol, unitarity_tol, canonical_tol}) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw DomainError("tolerances must be positive and finite");
        }
    }
}

std::size_t effective_rank(std::span<const double> singulars, const TolerancePolicy &policy) {
    for (std::size_t k = 0; k < singulars.size(); ++k) {
        if (!(singulars[k] >= 0.0)) {
            throw ContractViolation("effective_rank: singular values must be non-negative");
        }
        if (k > 0 && singulars[k] > singulars[k - 1]) {
            throw ContractViolation("effective_rank: singular values must be sorted descending");
        }
    }
    if (singulars.empty() || singulars[0] == 0.0) {
        return 0;
    }
    const double cutoff = policy.rank_tol * singulars[0];
    return static_cast<std::size_t>(
        std::count_if(singulars.begin(), singulars.end(), [cutoff](double s) { return s > cutoff; }));
}

bool check_unitary(const ComplexMatrix &m, const TolerancePolicy &policy) {
    if (!m.is_square()) {
        throw ShapeError("check_unitary: matrix is not square");
    }
    if (!m.all_finite()) {
        return false;
    }
    return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <= policy.unitarity_tol;
}

double hermitian_deviation(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw ShapeError("hermitian_deviation: matrix is not square");
    }
    return max_abs_diff(m, m.adjoint());
}

}  // namespace mpsim
