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

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "mpsim/errors.hpp"
#include "mpsim/numerics.hpp"
#include "random_fixtures.hpp"

namespace mpsim {
namespace {

using testing::random_matrix;
using testing::random_unitary;

ComplexMatrix reconstruct(const SvdResult &r) {
    ComplexMatrix s(r.singulars.size(), r.singulars.size());
    for (std::size_t k = 0; k < r.singulars.size(); ++k) {
        s(k, k) = r.singulars[k];
    }
    return r.left * s * r.right_dag;
}

double relative_error(const ComplexMatrix &m, const SvdResult &r) {
    return (m - reconstruct(r)).frobenius_norm() / m.frobenius_norm();
}

void expect_orthonormal(const SvdResult &r, double tol) {
    const std::size_t k = r.singulars.size();
    EXPECT_LE(max_abs_diff(r.left.adjoint() * r.left, ComplexMatrix::identity(k)), tol);
    EXPECT_LE(max_abs_diff(r.right_dag * r.right_dag.adjoint(), ComplexMatrix::identity(k)), tol);
}

std::vector<double> eigen_singulars(const ComplexMatrix &m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            e(r, c) = m(r, c);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
    const auto &s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

TEST(Svd, IdentityHasUnitSingulars) {
    const SvdResult r = svd(ComplexMatrix::identity(2));
    ASSERT_EQ(r.singulars.size(), 2u);
    EXPECT_NEAR(r.singulars[0], 1.0, 1e-15);
    EXPECT_NEAR(r.singulars[1], 1.0, 1e-15);
}

TEST(Svd, DiagonalIsSortedDescending) {
    const SvdResult r = svd(ComplexMatrix(2, 2, {3.0, 0.0, 0.0, 4.0}));
    EXPECT_NEAR(r.singulars[0], 4.0, 1e-14);
    EXPECT_NEAR(r.singulars[1], 3.0, 1e-14);
    EXPECT_LE(relative_error(ComplexMatrix(2, 2, {3.0, 0.0, 0.0, 4.0}), r), 1e-15);
}

TEST(Svd, RandomTallReconstructs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix m = random_matrix(6, 4, rng);
        const SvdResult r = svd(m);
        EXPECT_EQ(r.left.rows(), 6u);
        EXPECT_EQ(r.left.cols(), 4u);
        EXPECT_EQ(r.right_dag.rows(), 4u);
        EXPECT_LE(relative_error(m, r), 1e-12);
        expect_orthonormal(r, 1e-12);
    }
}

TEST(Svd, RandomWideReconstructs) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix m = random_matrix(3, 9, rng);
        const SvdResult r = svd(m);
        EXPECT_EQ(r.singulars.size(), 3u);
        EXPECT_EQ(r.right_dag.cols(), 9u);
        EXPECT_LE(relative_error(m, r), 1e-12);
        expect_orthonormal(r, 1e-12);
    }
}

TEST(Svd, SingularsMatchIndependentDecomposition) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = testing::uniform_index(rng, 1, 12);
        const std::size_t cols = testing::uniform_index(rng, 1, 12);
        const ComplexMatrix m = random_matrix(rows, cols, rng);
        const auto ours = svd(m).singulars;
        const auto ref = eigen_singulars(m);
        ASSERT_EQ(ours.size(), ref.size());
        for (std::size_t k = 0; k < ours.size(); ++k) {
            EXPECT_NEAR(ours[k], ref[k], 1e-12 * ref[0]);
        }
    }
}

TEST(Svd, RankDeficientKeepsOrthonormalFactors) {
    std::mt19937_64 rng(14);
    const ComplexMatrix a = random_matrix(8, 2, rng);
    const ComplexMatrix b = random_matrix(2, 8, rng);
    const ComplexMatrix m = a * b;  // rank 2
    const SvdResult r = svd(m);
    EXPECT_LE(relative_error(m, r), 1e-12);
    expect_orthonormal(r, 1e-12);
    for (std::size_t k = 2; k < r.singulars.size(); ++k) {
        EXPECT_LE(r.singulars[k], 1e-12 * r.singulars[0]);
    }
    EXPECT_EQ(effective_rank(r.singulars), 2u);
}

TEST(Svd, ZeroMatrixGivesZeroSingularsAndUnitaryFactors) {
    const SvdResult r = svd(ComplexMatrix(3, 3));
    for (double s : r.singulars) {
        EXPECT_EQ(s, 0.0);
    }
    expect_orthonormal(r, 1e-12);
}

TEST(Svd, SingularsNonNegativeAndSorted) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const SvdResult r = svd(random_matrix(5, 7, rng));
        for (std::size_t k = 0; k < r.singulars.size(); ++k) {
            EXPECT_GE(r.singulars[k], 0.0);
            if (k > 0) {
                EXPECT_GE(r.singulars[k - 1], r.singulars[k]);
            }
        }
    }
}

TEST(Svd, HugeAndTinyScalesReconstruct) {
    std::mt19937_64 rng(16);
    for (double scale : {1e-150, 1e-20, 1e20, 1e150}) {
        ComplexMatrix m = random_matrix(4, 4, rng);
        for (cplx &z : m.data()) {
            z *= scale;
        }
        EXPECT_LE(relative_error(m, svd(m)), 1e-12) << scale;
    }
}

TEST(Svd, RejectsNonFiniteAndEmpty) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(svd(m), NumericInputError);
    m(0, 1) = cplx(0.0, std::numeric_limits<double>::infinity());
    EXPECT_THROW(svd(m), NumericInputError);
    EXPECT_THROW(svd(ComplexMatrix()), NumericInputError);
}

TEST(EffectiveRank, Examples) {
    TolerancePolicy p;
    EXPECT_EQ(effective_rank(std::vector<double>{1.0, 0.0}, p), 1u);
    EXPECT_EQ(effective_rank(std::vector<double>{0.7071, 0.7071}, p), 2u);
    EXPECT_EQ(effective_rank(std::vector<double>{1.0, 1e-16}, p), 1u);
    EXPECT_EQ(effective_rank(std::vector<double>{0.0, 0.0}, p), 0u);
    EXPECT_EQ(effective_rank(std::vector<double>{}, p), 0u);
}

TEST(EffectiveRank, IsRelativeToLargest) {
    TolerancePolicy p;
    EXPECT_EQ(effective_rank(std::vector<double>{1e-20, 1e-25}, p), 2u);
    EXPECT_EQ(effective_rank(std::vector<double>{1e-20, 1e-33}, p), 1u);
}

TEST(EffectiveRank, RejectsUnsortedOrNegative) {
    EXPECT_THROW(effective_rank(std::vector<double>{0.1, 0.9}), ContractViolation);
    EXPECT_THROW(effective_rank(std::vector<double>{1.0, -0.1}), ContractViolation);
}

TEST(EffectiveRank, MonotoneInTolerance) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> s(10);
        for (double &x : s) {
            x = std::pow(10.0, -std::uniform_real_distribution<double>(0.0, 16.0)(rng));
        }
        std::sort(s.rbegin(), s.rend());
        std::size_t prev = s.size() + 1;
        for (double tol = 1e-16; tol < 1.0; tol *= 10.0) {
            TolerancePolicy p;
            p.rank_tol = tol;
            const std::size_t r = effective_rank(s, p);
            EXPECT_LE(r, prev);
            prev = r;
        }
    }
}

TEST(CheckUnitary, Examples) {
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_TRUE(check_unitary(ComplexMatrix(2, 2, {h, h, h, -h})));
    EXPECT_FALSE(check_unitary(ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 2.0})));
    std::mt19937_64 rng(18);
    EXPECT_TRUE(check_unitary(random_unitary(4, rng)));
    EXPECT_THROW(check_unitary(ComplexMatrix(2, 3)), ShapeError);
}

TEST(CheckUnitary, HonoursTolerance) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 0) = 1.0 + 1e-6;
    TolerancePolicy loose;
    loose.unitarity_tol = 1e-4;
    EXPECT_FALSE(check_unitary(m));
    EXPECT_TRUE(check_unitary(m, loose));
}

TEST(TolerancePolicy, Validate) {
    TolerancePolicy p;
    EXPECT_NO_THROW(p.validate());
    p.rank_tol = 0.0;
    EXPECT_THROW(p.validate(), DomainError);
    p = TolerancePolicy{};
    p.canonical_tol = -1.0;
    EXPECT_THROW(p.validate(), DomainError);
    p = TolerancePolicy{};
    p.unitarity_tol = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(p.validate(), DomainError);
}

TEST(ComplexMatrix, ShapeChecks) {
    EXPECT_THROW(ComplexMatrix(2, 2, std::vector<cplx>(3)), ShapeError);
    EXPECT_THROW(ComplexMatrix(2, 2) * ComplexMatrix(3, 1), ShapeError);
    const ComplexMatrix m(2, 3, {1.0, cplx(0, 2), 3.0, 4.0, 5.0, cplx(6, -1)});
    const ComplexMatrix a = m.adjoint();
    EXPECT_EQ(a.rows(), 3u);
    EXPECT_EQ(a(1, 0), cplx(0, -2));
    EXPECT_EQ(a(2, 1), cplx(6, 1));
    EXPECT_NEAR(hermitian_deviation(ComplexMatrix(2, 2, {1.0, cplx(0, 1), cplx(0, -1), 2.0})), 0.0, 0.0);
}

}  // namespace
}  // namespace mpsim
