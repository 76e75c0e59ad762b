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

// Compiled with -mavx2 -mfma; only reached through the dispatch table after
// a CPUID check. Each __m256d holds two interleaved complex doubles.

#include <immintrin.h>

#include <algorithm>

#include "mpsim/kernels.hpp"

namespace mpsim::kernels {
namespace {

inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

// s * v for a broadcast complex scalar s = (re, im).
inline __m256d cmul(__m256d v, __m256d s_re, __m256d s_im) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(v, s_re, _mm256_mul_pd(swapped, s_im));
}

// acc + s * v
inline __m256d cfma(__m256d acc, __m256d v, __m256d s_re, __m256d s_im) {
    return _mm256_add_pd(acc, cmul(v, s_re, s_im));
}

void mix_pair(cplx *x, cplx *y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11) {
    const __m256d a_re = _mm256_set1_pd(m00.real()), a_im = _mm256_set1_pd(m00.imag());
    const __m256d b_re = _mm256_set1_pd(m01.real()), b_im = _mm256_set1_pd(m01.imag());
    const __m256d c_re = _mm256_set1_pd(m10.real()), c_im = _mm256_set1_pd(m10.imag());
    const __m256d d_re = _mm256_set1_pd(m11.real()), d_im = _mm256_set1_pd(m11.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = load2(x + k);
        const __m256d vy = load2(y + k);
        store2(x + k, cfma(cmul(vx, a_re, a_im), vy, b_re, b_im));
        store2(y + k, cfma(cmul(vx, c_re, c_im), vy, d_re, d_im));
    }
    for (; k < n; ++k) {
        const cplx a = x[k];
        const cplx b = y[k];
        x[k] = m00 * a + m01 * b;
        y[k] = m10 * a + m11 * b;
    }
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx dot_conj(const cplx *x, const cplx *y, std::size_t n) {
    // re: xr*yr + xi*yi ; im: xr*yi - xi*yr
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = load2(x + k);
        const __m256d vy = load2(y + k);
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
        acc_im = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0b0101), acc_im);
    }
    // acc_im lanes hold (xr*yi, xi*yr); flip the sign of the odd lanes.
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    for (; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
    }
    return {re, im};
}

double norm_sq(const cplx *x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d v = load2(x + k);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; k < n; ++k) {
        s += x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    }
    return s;
}

void axpy(cplx a, const cplx *x, cplx *y, std::size_t n) {
    const __m256d a_re = _mm256_set1_pd(a.real());
    const __m256d a_im = _mm256_set1_pd(a.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        store2(y + k, cfma(load2(y + k), load2(x + k), a_re, a_im));
    }
    for (; k < n; ++k) {
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

const KernelTable &avx2_table() {
    static const KernelTable table{Isa::Avx2, "avx2", mix_pair, dot_conj, norm_sq, axpy, gemm};
    return table;
}

}  // namespace mpsim::kernels
