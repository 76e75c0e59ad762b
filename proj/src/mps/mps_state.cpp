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
#include <atomic>
#include <cmath>
#include <cstring>
#include <string>

#include "mpsim/mps_state.hpp"

namespace mpsim {
namespace {

std::atomic<std::size_t> g_dense_limit{14};

const double kUnit[1] = {1.0};

void check_dense_capacity(std::size_t n, const char *what) {
    if (n > dense_limit()) {
        throw CapacityError(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the dense limit of " +
                            std::to_string(dense_limit()));
    }
}

// Renormalizes the first `keep` values to unit square-sum.
std::vector<double> normalized_prefix(std::span<const double> s, std::size_t keep) {
    std::vector<double> out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(keep));
    double total = 0.0;
    for (double x : out) {
        total += x * x;
    }
    const double inv = 1.0 / std::sqrt(total);
    for (double &x : out) {
        x *= inv;
    }
    return out;
}

}  // namespace

bool GammaTensor::bitwise_equal(const GammaTensor &other) const noexcept {
    return left_ == other.left_ && right_ == other.right_ && data_.size() == other.data_.size() &&
           std::memcmp(data_.data(), other.data_.data(), data_.size() * sizeof(cplx)) == 0;
}

bool LambdaVector::bitwise_equal(const LambdaVector &other) const noexcept {
    return values.size() == other.values.size() &&
           std::memcmp(values.data(), other.values.data(), values.size() * sizeof(double)) == 0;
}

DenseState DenseState::basis(std::size_t n, std::size_t index) {
    check_dense_capacity(n, "DenseState::basis");
    DenseState d{n, std::vector<cplx>(std::size_t{1} << n)};
    if (index >= d.amplitudes.size()) {
        throw IndexError("DenseState::basis: index out of range");
    }
    d.amplitudes[index] = 1.0;
    return d;
}

double DenseState::norm_sq() const noexcept {
    double s = 0.0;
    for (const cplx &z : amplitudes) {
        s += std::norm(z);
    }
    return s;
}

std::size_t dense_limit() noexcept {
    return g_dense_limit.load();
}

void set_dense_limit(std::size_t n) {
    if (n == 0 || n > 30) {
        throw DomainError("dense limit must lie in [1, 30]");
    }
    g_dense_limit.store(n);
}

MpsState::MpsState(std::vector<GammaTensor> gammas, std::vector<LambdaVector> lambdas, const TolerancePolicy &policy)
    : gammas_(std::move(gammas)), lambdas_(std::move(lambdas)), policy_(policy) {
    policy_.validate();
    if (gammas_.empty()) {
        throw DomainError("MpsState needs at least one qubit");
    }
    if (lambdas_.size() + 1 != gammas_.size()) {
        throw ShapeError("MpsState: need n-1 lambda vectors for n sites");
    }
    if (gammas_.front().left_dim() != 1 || gammas_.back().right_dim() != 1) {
        throw ShapeError("MpsState: boundary bond dimensions must be 1");
    }
    for (std::size_t b = 0; b < lambdas_.size(); ++b) {
        const std::size_t d = lambdas_[b].size();
        if (d == 0 || gammas_[b].right_dim() != d || gammas_[b + 1].left_dim() != d) {
            throw ShapeError("MpsState: bond " + std::to_string(b + 1) + " dimensions do not chain");
        }
    }
}

MpsState MpsState::zero(std::size_t n, const TolerancePolicy &policy) {
    if (n == 0) {
        throw DomainError("init_zero: need at least one qubit");
    }
    std::vector<GammaTensor> g(n, GammaTensor(1, 1));
    for (GammaTensor &t : g) {
        t(0, 0, 0) = 1.0;
    }
    std::vector<LambdaVector> l(n - 1, LambdaVector{{1.0}});
    return MpsState(std::move(g), std::move(l), policy);
}

const GammaTensor &MpsState::gamma(std::size_t site) const {
    if (site < 1 || site > gammas_.size()) {
        throw IndexError("site " + std::to_string(site) + " out of range");
    }
    return gammas_[site - 1];
}

GammaTensor &MpsState::mutable_gamma(std::size_t site) {
    if (site < 1 || site > gammas_.size()) {
        throw IndexError("site " + std::to_string(site) + " out of range");
    }
    return gammas_[site - 1];
}

const LambdaVector &MpsState::lambda(std::size_t bond) const {
    if (bond < 1 || bond >= gammas_.size()) {
        throw IndexError("bond " + std::to_string(bond) + " out of range");
    }
    return lambdas_[bond - 1];
}

LambdaVector &MpsState::mutable_lambda(std::size_t bond) {
    if (bond < 1 || bond >= gammas_.size()) {
        throw IndexError("bond " + std::to_string(bond) + " out of range");
    }
    return lambdas_[bond - 1];
}

std::size_t MpsState::bond_dim(std::size_t bond) const {
    if (bond == 0 || bond == gammas_.size()) {
        return 1;
    }
    return lambda(bond).size();
}

std::span<const double> MpsState::lambda_or_unit(std::size_t bond) const {
    if (bond == 0 || bond == gammas_.size()) {
        return {kUnit, 1};
    }
    return lambda(bond).values;
}

void MpsState::set_policy(const TolerancePolicy &policy) {
    policy.validate();
    policy_ = policy;
}

void MpsState::set_chi_cap(std::optional<std::size_t> cap) {
    if (cap && *cap == 0) {
        throw DomainError("chi cap must be at least 1");
    }
    chi_cap_ = cap;
}

MpsState init_zero(std::size_t n, const TolerancePolicy &policy) {
    return MpsState::zero(n, policy);
}

MpsState from_dense(const DenseState &psi, const TolerancePolicy &policy) {
    policy.validate();
    const std::size_t n = psi.n;
    if (n == 0) {
        throw DomainError("from_dense: need at least one qubit");
    }
    check_dense_capacity(n, "from_dense");
    if (psi.amplitudes.size() != (std::size_t{1} << n)) {
        throw ShapeError("from_dense: amplitude count is not 2^n");
    }
    if (std::abs(psi.norm_sq() - 1.0) > policy.canonical_tol) {
        throw NormalizationError("from_dense: state is not normalized");
    }

    std::vector<GammaTensor> gammas;
    std::vector<LambdaVector> lambdas;
    gammas.reserve(n);
    lambdas.reserve(n - 1);

    // W holds the right Schmidt vectors of the previous cut, one per row,
    // reshaped so that rows are (alpha, i_l) and columns the remaining qubits.
    std::size_t left_dim = 1;
    std::vector<double> prev_lambda{1.0};
    ComplexMatrix w(2, std::size_t{1} << (n - 1), psi.amplitudes);

    for (std::size_t site = 1; site < n; ++site) {
        ComplexMatrix m = w;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const double scale = prev_lambda[r / 2];
            for (std::size_t c = 0; c < m.cols(); ++c) {
                m(r, c) *= scale;
            }
        }
        const SvdResult f = svd(m);
        const std::size_t rank = std::max<std::size_t>(1, effective_rank(f.singulars, policy));
        std::vector<double> lam = normalized_prefix(f.singulars, rank);

        GammaTensor g(left_dim, rank);
        const double guard = 10.0 * policy.rank_tol;
        for (std::size_t a = 0; a < left_dim; ++a) {
            for (std::size_t i = 0; i < 2; ++i) {
                const std::size_t row = a * 2 + i;
                for (std::size_t b = 0; b < rank; ++b) {
                    if (prev_lambda[a] >= guard) {
                        g(i, a, b) = f.left(row, b) / prev_lambda[a];
                    } else {
                        // Projection form: Gamma = W Vh^dag / s, no division by the tiny lambda.
                        cplx acc{};
                        for (std::size_t c = 0; c < w.cols(); ++c) {
                            acc += w(row, c) * std::conj(f.right_dag(b, c));
                        }
                        g(i, a, b) = acc / f.singulars[b];
                    }
                }
            }
        }
        gammas.push_back(std::move(g));
        lambdas.push_back(LambdaVector{lam});

        const std::size_t cols = f.right_dag.cols();
        std::vector<cplx> next(f.right_dag.data().begin(),
                               f.right_dag.data().begin() + static_cast<std::ptrdiff_t>(rank * cols));
        w = ComplexMatrix(rank * 2, cols / 2, std::move(next));
        left_dim = rank;
        prev_lambda = std::move(lam);
    }

    GammaTensor last(left_dim, 1);
    for (std::size_t a = 0; a < left_dim; ++a) {
        for (std::size_t i = 0; i < 2; ++i) {
            last(i, a, 0) = w(a * 2 + i, 0);
        }
    }
    gammas.push_back(std::move(last));
    return MpsState(std::move(gammas), std::move(lambdas), policy);
}

DenseState to_dense(const MpsState &state) {
    const std::size_t n = state.num_qubits();
    check_dense_capacity(n, "to_dense");
    // t: (2^(l-1) prefixes) x chi_(l-1), already weighted by lambda^[l-1].
    std::vector<cplx> t{1.0};
    std::size_t prefixes = 1;
    for (std::size_t site = 1; site <= n; ++site) {
        const GammaTensor &g = state.gamma(site);
        const std::size_t dl = g.left_dim();
        const std::size_t dr = g.right_dim();
        const std::span<const double> lam = state.lambda_or_unit(site);
        std::vector<cplx> next(prefixes * 2 * dr);
        for (std::size_t p = 0; p < prefixes; ++p) {
            for (std::size_t i = 0; i < 2; ++i) {
                cplx *out = next.data() + (p * 2 + i) * dr;
                for (std::size_t a = 0; a < dl; ++a) {
                    const cplx ta = t[p * dl + a];
                    for (std::size_t b = 0; b < dr; ++b) {
                        out[b] += ta * g(i, a, b);
                    }
                }
                for (std::size_t b = 0; b < dr; ++b) {
                    out[b] *= lam[b];
                }
            }
        }
        t = std::move(next);
        prefixes *= 2;
    }
    return DenseState{n, std::move(t)};
}

std::vector<double> schmidt_at_cut(const MpsState &state, std::size_t bond) {
    if (bond < 1 || bond >= state.num_qubits()) {
        throw IndexError("schmidt_at_cut: bond " + std::to_string(bond) + " outside [1, n-1]");
    }
    return state.lambda(bond).values;
}

std::size_t chi(const MpsState &state) {
    std::size_t worst = 1;
    for (std::size_t b = 1; b < state.num_qubits(); ++b) {
        worst = std::max(worst, state.bond_dim(b));
    }
    return worst;
}

double e_chi(const MpsState &state) {
    return std::log2(static_cast<double>(chi(state)));
}

std::size_t storage_count(const MpsState &state) {
    std::size_t count = 0;
    for (std::size_t site = 1; site <= state.num_qubits(); ++site) {
        count += state.gamma(site).data().size();
    }
    for (std::size_t b = 1; b < state.num_qubits(); ++b) {
        count += state.bond_dim(b);
    }
    return count;
}

CanonicalReport validate_canonical(const MpsState &state) {
    const std::size_t n = state.num_qubits();
    CanonicalReport rep;
    rep.tolerance = state.policy().canonical_tol;
    rep.left_deviation.resize(n);
    rep.right_deviation.resize(n);
    for (std::size_t site = 1; site <= n; ++site) {
        const GammaTensor &g = state.gamma(site);
        const std::size_t dl = g.left_dim();
        const std::size_t dr = g.right_dim();
        const std::span<const double> ll = state.lambda_or_unit(site - 1);
        const std::span<const double> lr = state.lambda_or_unit(site);

        // left: sum_i sum_a lambda_a^2 conj(G[i]_{ab}) G[i]_{ab'} = delta_{bb'}
        double left_dev = 0.0;
        for (std::size_t b = 0; b < dr; ++b) {
            for (std::size_t b2 = 0; b2 < dr; ++b2) {
                cplx acc{};
                for (std::size_t i = 0; i < 2; ++i) {
                    for (std::size_t a = 0; a < dl; ++a) {
                        acc += ll[a] * ll[a] * std::conj(g(i, a, b)) * g(i, a, b2);
                    }
                }
                left_dev = std::max(left_dev, std::abs(acc - (b == b2 ? 1.0 : 0.0)));
            }
        }
        // right: sum_i sum_b G[i]_{ab} lambda_b^2 conj(G[i]_{a'b}) = delta_{aa'}
        double right_dev = 0.0;
        for (std::size_t a = 0; a < dl; ++a) {
            for (std::size_t a2 = 0; a2 < dl; ++a2) {
                cplx acc{};
                for (std::size_t i = 0; i < 2; ++i) {
                    for (std::size_t b = 0; b < dr; ++b) {
                        acc += g(i, a, b) * lr[b] * lr[b] * std::conj(g(i, a2, b));
                    }
                }
                right_dev = std::max(right_dev, std::abs(acc - (a == a2 ? 1.0 : 0.0)));
            }
        }
        rep.left_deviation[site - 1] = left_dev;
        rep.right_deviation[site - 1] = right_dev;
        rep.max_deviation = std::max({rep.max_deviation, left_dev, right_dev});
        if (!(left_dev <= rep.tolerance && right_dev <= rep.tolerance)) {
            rep.failing_sites.push_back(site);
        }
    }
    for (std::size_t b = 1; b < n; ++b) {
        double sum = 0.0;
        for (double x : state.lambda(b).values) {
            sum += x * x;
        }
        const double dev = std::abs(sum - 1.0);
        rep.lambda_norm_deviation.push_back(dev);
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    rep.pass = rep.max_deviation <= rep.tolerance;
    return rep;
}

double global_norm(const MpsState &state) {
    // env_{b b'} = sum over the prefix of conj(A)_{.b} A_{.b'}, with A = Gamma Lambda.
    std::vector<cplx> env{1.0};
    std::size_t dim = 1;
    for (std::size_t site = 1; site <= state.num_qubits(); ++site) {
        const GammaTensor &g = state.gamma(site);
        const std::size_t dl = g.left_dim();
        const std::size_t dr = g.right_dim();
        const std::span<const double> lr = state.lambda_or_unit(site);
        std::vector<cplx> next(dr * dr);
        std::vector<cplx> tmp(dl * dr);
        for (std::size_t i = 0; i < 2; ++i) {
            // tmp = env * G[i]
            std::fill(tmp.begin(), tmp.end(), cplx{});
            for (std::size_t a = 0; a < dl; ++a) {
                for (std::size_t a2 = 0; a2 < dl; ++a2) {
                    const cplx e = env[a * dim + a2];
                    for (std::size_t b = 0; b < dr; ++b) {
                        tmp[a * dr + b] += e * g(i, a2, b);
                    }
                }
            }
            for (std::size_t a = 0; a < dl; ++a) {
                for (std::size_t b = 0; b < dr; ++b) {
                    const cplx lhs = std::conj(g(i, a, b));
                    for (std::size_t b2 = 0; b2 < dr; ++b2) {
                        next[b * dr + b2] += lhs * tmp[a * dr + b2];
                    }
                }
            }
        }
        for (std::size_t b = 0; b < dr; ++b) {
            for (std::size_t b2 = 0; b2 < dr; ++b2) {
                next[b * dr + b2] *= lr[b] * lr[b2];
            }
        }
        env = std::move(next);
        dim = dr;
    }
    return env[0].real();
}

}  // namespace mpsim
