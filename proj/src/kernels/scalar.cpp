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

#include "mpsim/kernels.hpp"

namespace mpsim::kernels {
namespace {

void mix_pair(cplx *x, cplx *y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11) {
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = x[k];
        const cplx b = y[k];
        x[k] = m00 * a + m01 * b;
        y[k] = m10 * a + m11 * b;
    }
}

cplx dot_conj(const cplx *x, const cplx *y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
    }
    return {re, im};
}

double norm_sq(const cplx *x, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s += x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    }
    return s;
}

void axpy(cplx a, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        y[k] += a * x[k];
    }
}

void gemm(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, cplx{});
    for (std::size_t i = 0; i < m; ++i) {
        cplx *crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{}) {
                continue;
            }
            axpy(aip, b + p * n, crow, n);
        }
    }
}

}  // namespace

const KernelTable &scalar_table() {
    static const KernelTable table{Isa::Scalar, "scalar", mix_pair, dot_conj, norm_sq, axpy, gemm};
    return table;
}

}  // namespace mpsim::kernels
