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

// One-sided (Hestenes) Jacobi SVD. The matrix is first brought to tall form
// (rows >= cols, adjoint otherwise), copied column-major so that every
// rotation acts on two contiguous columns, and rotated until all column pairs
// are orthogonal to sqrt(rows) * eps relative to their norms. Column norms
// are then the singular values. Relative accuracy is what the gate engine
// needs: small Schmidt values are divided out of the site tensors.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mpsim/kernels.hpp"
#include "mpsim/numerics.hpp"

namespace mpsim {
namespace {

constexpr int kMaxSweeps = 80;

struct ColumnMajor {
    std::size_t rows;
    std::size_t cols;
    std::vector<cplx> data;

    cplx *col(std::size_t c) {
        return data.data() + c * rows;
    }
    const cplx *col(std::size_t c) const {
        return data.data() + c * rows;
    }
};

// Replaces the columns flagged in `missing` with unit vectors orthogonal to
// every other column (classical Gram-Schmidt, two passes).
void complete_basis(ColumnMajor &u, const std::vector<bool> &missing) {
    const auto &k = kernels::active();
    std::vector<cplx> cand(u.rows);
    std::size_t next_unit = 0;
    for (std::size_t c = 0; c < u.cols; ++c) {
        if (!missing[c]) {
            continue;
        }
        bool placed = false;
        while (!placed && next_unit < u.rows) {
            std::fill(cand.begin(), cand.end(), cplx{});
            cand[next_unit++] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t o = 0; o < u.cols; ++o) {
                    if (o == c || (missing[o] && o > c)) {
                        continue;
                    }
                    const cplx proj = k.dot_conj(u.col(o), cand.data(), u.rows);
                    k.axpy(-proj, u.col(o), cand.data(), u.rows);
                }
            }
            const double nrm = std::sqrt(k.norm_sq(cand.data(), u.rows));
            if (nrm > 0.5) {
                for (std::size_t r = 0; r < u.rows; ++r) {
                    u.col(c)[r] = cand[r] / nrm;
                }
                placed = true;
            }
        }
        if (!placed) {
            throw NumericFailure("svd: could not complete the singular vector basis");
        }
    }
}

}  // namespace

SvdResult svd(const ComplexMatrix &m) {
    if (m.empty()) {
        throw NumericInputError("svd: empty matrix");
    }
    if (!m.all_finite()) {
        throw NumericInputError("svd: matrix has non-finite entries");
    }
    const bool wide = m.rows() < m.cols();
    const std::size_t rows = wide ? m.cols() : m.rows();
    const std::size_t cols = wide ? m.rows() : m.cols();

    double scale = 0.0;
    for (const cplx &z : m.data()) {
        scale = std::max(scale, std::abs(z));
    }
    const double inv_scale = scale > 0.0 ? 1.0 / scale : 1.0;

    ColumnMajor a{rows, cols, std::vector<cplx>(rows * cols)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const cplx z = m(r, c) * inv_scale;
            if (wide) {
                a.col(r)[c] = std::conj(z);
            } else {
                a.col(c)[r] = z;
            }
        }
    }
    ColumnMajor v{cols, cols, std::vector<cplx>(cols * cols)};
    for (std::size_t c = 0; c < cols; ++c) {
        v.col(c)[c] = 1.0;
    }

    const auto &k = kernels::active();
    const double eps = std::numeric_limits<double>::epsilon();
    const double tol = std::sqrt(static_cast<double>(rows)) * eps;
    // Columns at or below the rounding floor of the whole matrix carry no
    // information; rotating against them never settles, so they count as zero.
    const double fro_sq = k.norm_sq(a.data.data(), a.data.size());
    const double floor_sq = fro_sq * (static_cast<double>(rows) * eps) * (static_cast<double>(rows) * eps);
    bool converged = cols < 2;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const double ap = k.norm_sq(a.col(p), rows);
                const double aq = k.norm_sq(a.col(q), rows);
                if (ap <= floor_sq || aq <= floor_sq) {
                    continue;
                }
                const cplx g = k.dot_conj(a.col(p), a.col(q), rows);
                const double abs_g = std::abs(g);
                if (abs_g <= tol * std::sqrt(ap) * std::sqrt(aq)) {
                    continue;
                }
                rotated = true;
                const cplx e = std::conj(g) / abs_g;
                const double zeta = (aq - ap) / (2.0 * abs_g);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                k.mix_pair(a.col(p), a.col(q), rows, cs, -sn * e, sn, cs * e);
                k.mix_pair(v.col(p), v.col(q), cols, cs, -sn * e, sn, cs * e);
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw NumericFailure("svd: Jacobi sweeps did not converge");
    }

    std::vector<double> sigma(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        sigma[c] = std::sqrt(k.norm_sq(a.col(c), rows));
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    ColumnMajor u{rows, cols, std::vector<cplx>(rows * cols)};
    ColumnMajor vs{cols, cols, std::vector<cplx>(cols * cols)};
    std::vector<double> sorted(cols);
    std::vector<bool> missing(cols, false);
    for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t src = order[c];
        sorted[c] = sigma[src] * scale;
        std::copy(v.col(src), v.col(src) + cols, vs.col(c));
        if (sigma[src] * sigma[src] > floor_sq && std::isfinite(1.0 / sigma[src])) {
            const double inv = 1.0 / sigma[src];
            for (std::size_t r = 0; r < rows; ++r) {
                u.col(c)[r] = a.col(src)[r] * inv;
            }
        } else {
            sorted[c] = 0.0;
            missing[c] = true;
        }
    }
    if (std::find(missing.begin(), missing.end(), true) != missing.end()) {
        complete_basis(u, missing);
    }

    // Tall: m = U S V^dag.  Wide: m^dag = U S V^dag, so m = V S U^dag.
    SvdResult out;
    out.singulars = std::move(sorted);
    if (!wide) {
        out.left = ComplexMatrix(rows, cols);
        out.right_dag = ComplexMatrix(cols, cols);
        for (std::size_t c = 0; c < cols; ++c) {
            for (std::size_t r = 0; r < rows; ++r) {
                out.left(r, c) = u.col(c)[r];
            }
            for (std::size_t r = 0; r < cols; ++r) {
                out.right_dag(c, r) = std::conj(vs.col(c)[r]);
            }
        }
    } else {
        out.left = ComplexMatrix(cols, cols);
        out.right_dag = ComplexMatrix(cols, rows);
        for (std::size_t c = 0; c < cols; ++c) {
            for (std::size_t r = 0; r < cols; ++r) {
                out.left(r, c) = vs.col(c)[r];
            }
            for (std::size_t r = 0; r < rows; ++r) {
                out.right_dag(c, r) = std::conj(u.col(c)[r]);
            }
        }
    }
    return out;
}

}  // namespace mpsim
