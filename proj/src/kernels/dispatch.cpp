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

#include <atomic>
#include <cstdlib>
#include <string>

#include "mpsim/kernels.hpp"

namespace mpsim::kernels {

#if defined(MPSIM_HAVE_AVX2)
const KernelTable &avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(MPSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable *table_for(Isa isa) {
    switch (isa) {
    case Isa::Scalar:
        return &scalar_table();
    case Isa::Avx2:
#if defined(MPSIM_HAVE_AVX2)
        return cpu_has_avx2() ? &avx2_table() : nullptr;
#else
        return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable *pick_default() {
    if (const char *env = std::getenv("MPSIM_ISA"); env != nullptr && std::string(env) == "scalar") {
        return &scalar_table();
    }
    if (const KernelTable *t = table_for(Isa::Avx2)) {
        return t;
    }
    return &scalar_table();
}

std::atomic<const KernelTable *> &current() {
    static std::atomic<const KernelTable *> ptr{pick_default()};
    return ptr;
}

}  // namespace

bool available(Isa isa) {
    return table_for(isa) != nullptr;
}

const KernelTable &active() {
    return *current().load(std::memory_order_acquire);
}

void set_active(Isa isa) {
    const KernelTable *t = table_for(isa);
    if (t == nullptr) {
        throw DomainError("kernel ISA '" + std::string(isa_name(isa)) + "' is not available on this machine");
    }
    current().store(t, std::memory_order_release);
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
    if (available(Isa::Avx2)) {
        out.push_back(Isa::Avx2);
    }
    return out;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    }
    return "unknown";
}

}  // namespace mpsim::kernels
