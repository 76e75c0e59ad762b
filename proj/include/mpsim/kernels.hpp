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

// Complex-double inner loops used by the SVD and the gate engine. Every
// kernel has a scalar reference implementation; wider variants are selected
// at runtime when the CPU supports them and must agree with the reference to
// rounding (see tests/unit/test_kernels.cpp).

#include <cstddef>
#include <string_view>
#include <vector>

#include "mpsim/numerics.hpp"

namespace mpsim::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;

    /// x' = m00*x + m01*y,  y' = m10*x + m11*y  (elementwise over n entries).
    void (*mix_pair)(cplx *x, cplx *y, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11);

    /// sum_k conj(x[k]) * y[k]
    cplx (*dot_conj)(const cplx *x, const cplx *y, std::size_t n);

    /// sum_k |x[k]|^2
    double (*norm_sq)(const cplx *x, std::size_t n);

    /// y += a * x
    void (*axpy)(cplx a, const cplx *x, cplx *y, std::size_t n);

    /// c = a * b for row-major a (m x k), b (k x n), c (m x n). c is overwritten.
    void (*gemm)(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n);
};

const KernelTable &scalar_table();

/// Whether `isa` is compiled in and supported by the running CPU.
bool available(Isa isa);

/// Kernel table currently in use. On first call picks the widest available
/// ISA unless the environment variable MPSIM_ISA=scalar forces the reference.
const KernelTable &active();

/// Switches the active table; throws DomainError if `isa` is unavailable.
void set_active(Isa isa);

std::vector<Isa> available_isas();

std::string_view isa_name(Isa isa);

}  // namespace mpsim::kernels
