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

#include "mpsim/gates.hpp"
#include "mpsim/kernels.hpp"

namespace mpsim {
namespace {

const ComplexMatrix &swap_matrix() {
    static const ComplexMatrix m(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    return m;
}

ComplexMatrix conjugate_by_swap(const ComplexMatrix &v) {
    ComplexMatrix out(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const std::size_t rs = (r % 2) * 2 + r / 2;
            const std::size_t cs = (c % 2) * 2 + c / 2;
            out(rs, cs) = v(r, c);
        }
    }
    return out;
}

void check_site(const MpsState &state, std::size_t site, const char *what) {
    if (site < 1 || site > state.num_qubits()) {
        throw IndexError(std::string(what) + ": qubit " + std::to_string(site) + " outside [1, " +
                         std::to_string(state.num_qubits()) + "]");
    }
}

}  // namespace

Gate1Q::Gate1Q(ComplexMatrix m, std::size_t t, const TolerancePolicy &policy) : matrix(std::move(m)), target(t) {
    if (matrix.rows() != 2 || matrix.cols() != 2) {
        throw GateError("single-qubit gate needs a 2x2 matrix");
    }
    if (!check_unitary(matrix, policy)) {
        throw GateError("single-qubit gate matrix is not unitary");
    }
}

Gate2Q::Gate2Q(ComplexMatrix m, std::size_t a, std::size_t b, const TolerancePolicy &policy)
    : matrix(std::move(m)), first(a), second(b) {
    if (matrix.rows() != 4 || matrix.cols() != 4) {
        throw GateError("two-qubit gate needs a 4x4 matrix");
    }
    if (first == second) {
        throw GateError("two-qubit gate targets must be distinct");
    }
    if (!check_unitary(matrix, policy)) {
        throw GateError("two-qubit gate matrix is not unitary");
    }
}

Gate2Q Gate2Q::reversed() const {
    Gate2Q g = *this;
    g.matrix = conjugate_by_swap(matrix);
    std::swap(g.first, g.second);
    return g;
}

void apply_1q(MpsState &state, const Gate1Q &gate) {
    check_site(state, gate.target, "apply_1q");
    if (gate.matrix.rows() != 2 || gate.matrix.cols() != 2) {
        throw GateError("apply_1q: matrix must be 2x2");
    }
    GammaTensor &g = state.mutable_gamma(gate.target);
    const ComplexMatrix &u = gate.matrix;
    kernels::active().mix_pair(g.slice(0), g.slice(1), g.slice_size(), u(0, 0), u(0, 1), u(1, 0), u(1, 1));
}

ThetaTensor form_theta(const MpsState &state, std::size_t site, const ComplexMatrix &v) {
    const GammaTensor &gc = state.gamma(site);
    const GammaTensor &gd = state.gamma(site + 1);
    const std::span<const double> lam = state.lambda_or_unit(site);
    const std::size_t dl = gc.left_dim();
    const std::size_t mid = gc.right_dim();
    const std::size_t dr = gd.right_dim();
    const auto &k = kernels::active();

    // products[k*2+l] = Gamma_C[k] diag(lambda) Gamma_D[l]
    std::vector<cplx> scaled(dl * mid);
    std::vector<std::vector<cplx>> products(4, std::vector<cplx>(dl * dr));
    for (std::size_t kc = 0; kc < 2; ++kc) {
        const cplx *src = gc.slice(kc);
        for (std::size_t a = 0; a < dl; ++a) {
            for (std::size_t b = 0; b < mid; ++b) {
                scaled[a * mid + b] = src[a * mid + b] * lam[b];
            }
        }
        for (std::size_t ld = 0; ld < 2; ++ld) {
            k.gemm(scaled.data(), gd.slice(ld), products[kc * 2 + ld].data(), dl, mid, dr);
        }
    }

    ThetaTensor theta{dl, dr, std::vector<cplx>(dl * 2 * 2 * dr)};
    std::vector<cplx> block(dl * dr);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            std::fill(block.begin(), block.end(), cplx{});
            for (std::size_t kl = 0; kl < 4; ++kl) {
                const cplx coeff = v(i * 2 + j, kl);
                if (coeff != cplx{}) {
                    k.axpy(coeff, products[kl].data(), block.data(), block.size());
                }
            }
            for (std::size_t a = 0; a < dl; ++a) {
                std::copy(block.begin() + static_cast<std::ptrdiff_t>(a * dr),
                          block.begin() + static_cast<std::ptrdiff_t>((a + 1) * dr), &theta(a, i, j, 0));
            }
        }
    }
    return theta;
}

void apply_2q_adjacent(MpsState &state, std::size_t site, const ComplexMatrix &gate) {
    const std::size_t n = state.num_qubits();
    if (site < 1 || site + 1 > n) {
        throw IndexError("apply_2q_adjacent: site " + std::to_string(site) + " has no right neighbour");
    }
    if (gate.rows() != 4 || gate.cols() != 4 || !check_unitary(gate, state.policy())) {
        throw GateError("apply_2q_adjacent: matrix must be a 4x4 unitary");
    }
    const TolerancePolicy &policy = state.policy();
    const ThetaTensor theta = form_theta(state, site, gate);
    const std::size_t dl = theta.left_dim;
    const std::size_t dr = theta.right_dim;
    const std::span<const double> lam_l = state.lambda_or_unit(site - 1);
    const std::span<const double> lam_r = state.lambda_or_unit(site + 1);

    // Coefficients in the orthonormal Schmidt bases of the outer cuts.
    ComplexMatrix m(2 * dl, 2 * dr, theta.data);
    for (std::size_t a = 0; a < dl; ++a) {
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                for (std::size_t g = 0; g < dr; ++g) {
                    m(a * 2 + i, j * dr + g) *= lam_l[a] * lam_r[g];
                }
            }
        }
    }

    const SvdResult f = svd(m);
    std::size_t rank = std::max<std::size_t>(1, effective_rank(f.singulars, policy));
    if (const auto cap = state.chi_cap(); cap && rank > *cap) {
        double total = 0.0;
        double dropped = 0.0;
        for (std::size_t b = 0; b < f.singulars.size(); ++b) {
            const double w = f.singulars[b] * f.singulars[b];
            total += w;
            if (b >= *cap) {
                dropped += w;
            }
        }
        state.add_truncation_weight(dropped / total);
        rank = *cap;
    }

    double kept = 0.0;
    for (std::size_t b = 0; b < rank; ++b) {
        kept += f.singulars[b] * f.singulars[b];
    }
    const double inv_norm = 1.0 / std::sqrt(kept);
    LambdaVector lam_new;
    lam_new.values.resize(rank);
    for (std::size_t b = 0; b < rank; ++b) {
        lam_new.values[b] = f.singulars[b] * inv_norm;
    }

    const double guard = 10.0 * policy.rank_tol;
    GammaTensor gc(dl, rank);
    for (std::size_t a = 0; a < dl; ++a) {
        for (std::size_t i = 0; i < 2; ++i) {
            const std::size_t row = a * 2 + i;
            for (std::size_t b = 0; b < rank; ++b) {
                if (lam_l[a] >= guard) {
                    gc(i, a, b) = f.left(row, b) / lam_l[a];
                } else {
                    // lambda'_b Phi_b = <Phi^DK_b|Psi'>, evaluated on Theta directly.
                    cplx acc{};
                    for (std::size_t c = 0; c < 2 * dr; ++c) {
                        acc += theta.data[row * 2 * dr + c] * lam_r[c % dr] * std::conj(f.right_dag(b, c));
                    }
                    gc(i, a, b) = acc / f.singulars[b];
                }
            }
        }
    }
    GammaTensor gd(rank, dr);
    for (std::size_t b = 0; b < rank; ++b) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t g = 0; g < dr; ++g) {
                const std::size_t col = j * dr + g;
                if (lam_r[g] >= guard) {
                    gd(j, b, g) = f.right_dag(b, col) / lam_r[g];
                } else {
                    cplx acc{};
                    for (std::size_t r = 0; r < 2 * dl; ++r) {
                        acc += std::conj(f.left(r, b)) * lam_l[r / 2] * theta.data[r * 2 * dr + col];
                    }
                    gd(j, b, g) = acc / f.singulars[b];
                }
            }
        }
    }

    state.mutable_gamma(site) = std::move(gc);
    state.mutable_lambda(site) = std::move(lam_new);
    state.mutable_gamma(site + 1) = std::move(gd);
}

std::size_t apply_2q(MpsState &state, const Gate2Q &gate, Routing routing) {
    check_site(state, gate.first, "apply_2q");
    check_site(state, gate.second, "apply_2q");
    if (gate.first == gate.second) {
        throw GateError("apply_2q: targets must be distinct");
    }
    const std::size_t lo = std::min(gate.first, gate.second);
    const std::size_t hi = std::max(gate.first, gate.second);
    const ComplexMatrix v = gate.first < gate.second ? gate.matrix : conjugate_by_swap(gate.matrix);
    const ComplexMatrix &sw = swap_matrix();

    std::size_t swaps = 0;
    if (routing == Routing::MoveLower) {
        for (std::size_t s = lo; s + 1 < hi; ++s, ++swaps) {
            apply_2q_adjacent(state, s, sw);
        }
        apply_2q_adjacent(state, hi - 1, v);
        for (std::size_t s = hi - 1; s > lo; --s, ++swaps) {
            apply_2q_adjacent(state, s - 1, sw);
        }
    } else {
        for (std::size_t s = hi - 1; s > lo; --s, ++swaps) {
            apply_2q_adjacent(state, s, sw);
        }
        apply_2q_adjacent(state, lo, v);
        for (std::size_t s = lo + 1; s < hi; ++s, ++swaps) {
            apply_2q_adjacent(state, s, sw);
        }
    }
    return swaps;
}

double truncate_bond(MpsState &state, std::size_t bond, std::size_t cap) {
    if (cap == 0) {
        throw DomainError("truncate_bond: cap must be at least 1");
    }
    const LambdaVector &lam = state.lambda(bond);
    if (cap >= lam.size()) {
        return 0.0;
    }
    double dropped = 0.0;
    double kept = 0.0;
    for (std::size_t b = 0; b < lam.size(); ++b) {
        (b < cap ? kept : dropped) += lam[b] * lam[b];
    }
    const double inv = 1.0 / std::sqrt(kept);
    LambdaVector next;
    next.values.reserve(cap);
    for (std::size_t b = 0; b < cap; ++b) {
        next.values.push_back(lam[b] * inv);
    }

    const GammaTensor &left = state.gamma(bond);
    GammaTensor new_left(left.left_dim(), cap);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t a = 0; a < left.left_dim(); ++a) {
            for (std::size_t b = 0; b < cap; ++b) {
                new_left(i, a, b) = left(i, a, b);
            }
        }
    }
    const GammaTensor &right = state.gamma(bond + 1);
    GammaTensor new_right(cap, right.right_dim());
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t b = 0; b < cap; ++b) {
            for (std::size_t g = 0; g < right.right_dim(); ++g) {
                new_right(i, b, g) = right(i, b, g);
            }
        }
    }
    state.mutable_gamma(bond) = std::move(new_left);
    state.mutable_gamma(bond + 1) = std::move(new_right);
    state.mutable_lambda(bond) = std::move(next);
    state.add_truncation_weight(dropped);
    return dropped;
}

}  // namespace mpsim
