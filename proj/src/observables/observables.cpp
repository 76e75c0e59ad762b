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

#include <cctype>
#include <cmath>
#include <iostream>
#include <random>

#include "mpsim/observables.hpp"

namespace mpsim {
namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kImagWarn = 1e-8;

ComplexMatrix slice_matrix(const GammaTensor &g, std::size_t i) {
    return ComplexMatrix(g.left_dim(), g.right_dim(),
                         std::vector<cplx>(g.slice(i), g.slice(i) + g.slice_size()));
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ProductObservable::ProductObservable(std::vector<ComplexMatrix> factors) : factors_(std::move(factors)) {
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        const ComplexMatrix &f = factors_[k];
        if (f.rows() != 2 || f.cols() != 2) {
            throw ObservableError("observable factor " + std::to_string(k + 1) + " is not 2x2");
        }
        if (!f.all_finite() || hermitian_deviation(f) > kHermitianTol) {
            throw ObservableError("observable factor " + std::to_string(k + 1) + " is not Hermitian");
        }
    }
}

ProductObservable ProductObservable::pauli(std::string_view s) {
    std::vector<ComplexMatrix> f;
    f.reserve(s.size());
    for (char ch : s) {
        switch (std::toupper(static_cast<unsigned char>(ch))) {
        case 'I':
            f.push_back(ComplexMatrix::identity(2));
            break;
        case 'X':
            f.emplace_back(2, 2, std::initializer_list<cplx>{0, 1, 1, 0});
            break;
        case 'Y':
            f.emplace_back(2, 2, std::initializer_list<cplx>{0, cplx(0, -1), cplx(0, 1), 0});
            break;
        case 'Z':
            f.emplace_back(2, 2, std::initializer_list<cplx>{1, 0, 0, -1});
            break;
        default:
            throw ObservableError(std::string("invalid Pauli character '") + ch + "'");
        }
    }
    return ProductObservable(std::move(f));
}

Expectation expect_product_detailed(const MpsState &state, const ProductObservable &obs) {
    const std::size_t n = state.num_qubits();
    if (obs.size() != n) {
        throw ObservableError("observable has " + std::to_string(obs.size()) + " factors for " + std::to_string(n) +
                              " qubits");
    }
    ComplexMatrix env(1, 1, {1.0});
    for (std::size_t site = 1; site <= n; ++site) {
        const GammaTensor &g = state.gamma(site);
        const ComplexMatrix &o = obs.factor(site - 1);
        const std::span<const double> lam = state.lambda_or_unit(site);
        const ComplexMatrix bra[2] = {slice_matrix(g, 0).adjoint(), slice_matrix(g, 1).adjoint()};
        ComplexMatrix next(g.right_dim(), g.right_dim());
        for (std::size_t i2 = 0; i2 < 2; ++i2) {
            const ComplexMatrix ket = env * slice_matrix(g, i2);
            for (std::size_t i = 0; i < 2; ++i) {
                const cplx w = o(i, i2);
                if (w == cplx{}) {
                    continue;
                }
                const ComplexMatrix term = bra[i] * ket;
                for (std::size_t k = 0; k < term.data().size(); ++k) {
                    next.data()[k] += w * term.data()[k];
                }
            }
        }
        for (std::size_t b = 0; b < next.rows(); ++b) {
            for (std::size_t b2 = 0; b2 < next.cols(); ++b2) {
                next(b, b2) *= lam[b] * lam[b2];
            }
        }
        env = std::move(next);
    }
    return {env(0, 0).real(), env(0, 0).imag()};
}

double expect_product(const MpsState &state, const ProductObservable &obs) {
    const Expectation e = expect_product_detailed(state, obs);
    if (std::abs(e.imag_residue) > kImagWarn) {
        std::cerr << "warning: expectation value has imaginary residue " << e.imag_residue << "\n";
    }
    return e.value;
}

cplx amplitude(const MpsState &state, std::string_view bits) {
    const std::size_t n = state.num_qubits();
    if (bits.size() != n) {
        throw ObservableError("bitstring has length " + std::to_string(bits.size()) + ", expected " +
                              std::to_string(n));
    }
    std::vector<cplx> v{1.0};
    for (std::size_t site = 1; site <= n; ++site) {
        const char ch = bits[site - 1];
        if (ch != '0' && ch != '1') {
            throw ObservableError(std::string("bitstring has non-binary character '") + ch + "'");
        }
        const std::size_t i = ch == '1' ? 1 : 0;
        const GammaTensor &g = state.gamma(site);
        const std::span<const double> lam = state.lambda_or_unit(site);
        std::vector<cplx> next(g.right_dim());
        for (std::size_t a = 0; a < g.left_dim(); ++a) {
            for (std::size_t b = 0; b < g.right_dim(); ++b) {
                next[b] += v[a] * g(i, a, b);
            }
        }
        for (std::size_t b = 0; b < next.size(); ++b) {
            next[b] *= lam[b];
        }
        v = std::move(next);
    }
    return v[0];
}

SampleResult sample(const MpsState &state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("sample: shots must be at least 1");
    }
    const std::size_t n = state.num_qubits();
    SampleResult result;
    result.shots = shots;
    result.seed = seed;
    std::mt19937_64 rng(seed);
    std::string bits(n, '0');
    std::vector<cplx> v;
    std::vector<cplx> w[2];
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        v.assign(1, 1.0);
        for (std::size_t site = 1; site <= n; ++site) {
            const GammaTensor &g = state.gamma(site);
            const std::span<const double> lam = state.lambda_or_unit(site);
            double p[2] = {0.0, 0.0};
            for (std::size_t i = 0; i < 2; ++i) {
                w[i].assign(g.right_dim(), cplx{});
                for (std::size_t a = 0; a < g.left_dim(); ++a) {
                    const cplx va = v[a];
                    for (std::size_t b = 0; b < g.right_dim(); ++b) {
                        w[i][b] += va * g(i, a, b);
                    }
                }
                for (std::size_t b = 0; b < g.right_dim(); ++b) {
                    w[i][b] *= lam[b];
                    p[i] += std::norm(w[i][b]);
                }
            }
            const std::size_t pick = uniform01(rng) * (p[0] + p[1]) < p[0] ? 0 : 1;
            bits[site - 1] = pick == 0 ? '0' : '1';
            const double inv = 1.0 / std::sqrt(p[pick]);
            v.resize(g.right_dim());
            for (std::size_t b = 0; b < g.right_dim(); ++b) {
                v[b] = w[pick][b] * inv;
            }
        }
        ++result.counts[bits];
    }
    return result;
}

}  // namespace mpsim
