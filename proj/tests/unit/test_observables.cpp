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
#include <random>

#include <gtest/gtest.h>

#include "mpsim/circuit.hpp"
#include "mpsim/dense_oracle.hpp"
#include "mpsim/errors.hpp"
#include "mpsim/observables.hpp"
#include "random_fixtures.hpp"

namespace mpsim {
namespace {

MpsState run(const std::string &text) {
    const Circuit c = parse_circuit(text);
    MpsState s = init_zero(c.num_qubits);
    for (const CircuitOp &op : c.ops) {
        apply_op(s, op);
    }
    return s;
}

MpsState ghz(std::size_t n) {
    std::string text = "qubits " + std::to_string(n) + "\nh 0\n";
    for (std::size_t q = 0; q + 1 < n; ++q) {
        text += "cx " + std::to_string(q) + " " + std::to_string(q + 1) + "\n";
    }
    return run(text);
}

std::vector<ComplexMatrix> pauli_factors(const std::string &p) {
    std::vector<ComplexMatrix> f;
    for (char c : p) {
        f.push_back(c == 'I' ? ComplexMatrix::identity(2) : builtin_gate(std::string(1, static_cast<char>(c + 32))));
    }
    return f;
}

std::string random_pauli(std::size_t n, std::mt19937_64 &rng) {
    static const char kP[] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    for (std::size_t k = 0; k < n; ++k) {
        s += kP[testing::uniform_index(rng, 0, 3)];
    }
    return s;
}

TEST(Expect, Examples) {
    EXPECT_NEAR(expect_product(init_zero(1), ProductObservable::pauli("Z")), 1.0, 1e-15);
    const MpsState bell = ghz(2);
    EXPECT_NEAR(expect_product(bell, ProductObservable::pauli("ZZ")), 1.0, 1e-14);
    EXPECT_NEAR(expect_product(bell, ProductObservable::pauli("ZI")), 0.0, 1e-14);
    EXPECT_NEAR(expect_product(bell, ProductObservable::pauli("XX")), 1.0, 1e-14);
    EXPECT_NEAR(expect_product(bell, ProductObservable::pauli("yy")), -1.0, 1e-14);
}

TEST(Expect, RandomPauliMatchesOracle) {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 50; ++trial) {
        const MpsState s = testing::random_evolved(8, 40, rng);
        const std::string p = random_pauli(8, rng);
        const cplx ref = oracle::dense_expect(to_dense(s), pauli_factors(p));
        const Expectation e = expect_product_detailed(s, ProductObservable::pauli(p));
        EXPECT_NEAR(e.value, ref.real(), 1e-9) << p;
        EXPECT_LE(std::abs(e.imag_residue), 1e-10);
    }
}

TEST(Expect, GeneralHermitianFactors) {
    std::mt19937_64 rng(82);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = testing::uniform_index(rng, 1, 7);
        const MpsState s = testing::random_evolved(n, 30, rng);
        std::vector<ComplexMatrix> f;
        for (std::size_t k = 0; k < n; ++k) {
            const ComplexMatrix a = testing::random_matrix(2, 2, rng);
            ComplexMatrix h = a;
            const ComplexMatrix ad = a.adjoint();
            for (std::size_t i = 0; i < 4; ++i) {
                h.data()[i] = 0.5 * (a.data()[i] + ad.data()[i]);
            }
            f.push_back(h);
        }
        const cplx ref = oracle::dense_expect(to_dense(s), f);
        EXPECT_NEAR(expect_product(s, ProductObservable(f)), ref.real(), 1e-10 * (1.0 + std::abs(ref)));
    }
}

TEST(Expect, IdentityIsOne) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = testing::uniform_index(rng, 1, 10);
        EXPECT_NEAR(expect_product(testing::random_evolved(n, 40, rng), ProductObservable::pauli(std::string(n, 'I'))),
                    1.0, 1e-12);
    }
}

TEST(Expect, SingleZMatchesAmplitudeSum) {
    std::mt19937_64 rng(84);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = testing::uniform_index(rng, 1, 8);
        const MpsState s = testing::random_evolved(n, 30, rng);
        for (std::size_t l = 0; l < n; ++l) {
            std::string p(n, 'I');
            p[l] = 'Z';
            double ref = 0.0;
            for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
                std::string bits(n, '0');
                for (std::size_t q = 0; q < n; ++q) {
                    bits[q] = (idx >> (n - 1 - q)) & 1 ? '1' : '0';
                }
                ref += (bits[l] == '1' ? -1.0 : 1.0) * std::norm(amplitude(s, bits));
            }
            EXPECT_NEAR(expect_product(s, ProductObservable::pauli(p)), ref, 1e-10);
        }
    }
}

TEST(Expect, Errors) {
    EXPECT_THROW(ProductObservable::pauli("XQ"), ObservableError);
    EXPECT_THROW(ProductObservable({ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})}), ObservableError);
    EXPECT_THROW(ProductObservable({ComplexMatrix::identity(3)}), ObservableError);
    EXPECT_THROW(expect_product(init_zero(3), ProductObservable::pauli("ZZ")), ObservableError);
}

TEST(Amplitude, Examples) {
    EXPECT_EQ(amplitude(init_zero(3), "000"), cplx(1.0));
    EXPECT_NEAR(std::abs(amplitude(ghz(3), "010")), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(amplitude(ghz(3), "111")), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Amplitude, MatchesOracle) {
    std::mt19937_64 rng(85);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = testing::uniform_index(rng, 1, 10);
        const Circuit c = testing::random_any_circuit(n, 40, rng);
        MpsState s = init_zero(n);
        for (const CircuitOp &op : c.ops) {
            apply_op(s, op);
        }
        const DenseState d = oracle::dense_run(c);
        const std::string bits = testing::random_bits(n, rng);
        EXPECT_LE(std::abs(amplitude(s, bits) - d.amplitudes[std::stoull(bits, nullptr, 2)]), 1e-10);
    }
}

TEST(Amplitude, ProbabilitiesSumToOne) {
    std::mt19937_64 rng(86);
    for (std::size_t n = 1; n <= 10; ++n) {
        const MpsState s = testing::random_evolved(n, 40, rng);
        double total = 0.0;
        for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
            std::string bits(n, '0');
            for (std::size_t q = 0; q < n; ++q) {
                bits[q] = (idx >> (n - 1 - q)) & 1 ? '1' : '0';
            }
            total += std::norm(amplitude(s, bits));
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(Amplitude, Errors) {
    EXPECT_THROW(amplitude(init_zero(3), "00"), ObservableError);
    EXPECT_THROW(amplitude(init_zero(3), "0a0"), ObservableError);
}

TEST(Sample, ZeroStateIsDeterministic) {
    const SampleResult r = sample(init_zero(4), 100, 1);
    ASSERT_EQ(r.counts.size(), 1u);
    EXPECT_EQ(r.counts.at("0000"), 100u);
    EXPECT_EQ(r.shots, 100u);
    EXPECT_EQ(r.seed, 1u);
    EXPECT_FALSE(r.rng.empty());
}

TEST(Sample, GhzTwoOutcomes) {
    const SampleResult r = sample(ghz(10), 10000, 2026);
    std::uint64_t total = 0;
    for (const auto &[bits, k] : r.counts) {
        EXPECT_TRUE(bits == "0000000000" || bits == "1111111111") << bits;
        EXPECT_GE(k, 4500u);
        EXPECT_LE(k, 5500u);
        total += k;
    }
    EXPECT_EQ(total, 10000u);
}

TEST(Sample, Reproducible) {
    std::mt19937_64 rng(87);
    const MpsState s = testing::random_evolved(6, 30, rng);
    EXPECT_EQ(sample(s, 2000, 9).counts, sample(s, 2000, 9).counts);
    EXPECT_NE(sample(s, 2000, 9).counts, sample(s, 2000, 10).counts);
}

TEST(Sample, TotalVariationAgainstOracle) {
    std::mt19937_64 rng(88);
    const std::size_t n = 6;
    const MpsState s = from_dense(testing::random_dense(n, rng));
    const DenseState d = to_dense(s);
    const std::uint64_t shots = 50000;
    const SampleResult r = sample(s, shots, 42);
    double tv = 0.0;
    for (std::size_t idx = 0; idx < d.amplitudes.size(); ++idx) {
        std::string bits(n, '0');
        for (std::size_t q = 0; q < n; ++q) {
            bits[q] = (idx >> (n - 1 - q)) & 1 ? '1' : '0';
        }
        const auto it = r.counts.find(bits);
        const double emp = it == r.counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
        tv += std::abs(emp - std::norm(d.amplitudes[idx]));
    }
    EXPECT_LE(0.5 * tv, 0.02);
}

TEST(Sample, FirstQubitMarginal) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 5; ++trial) {
        const MpsState s = testing::random_evolved(7, 40, rng);
        const std::uint64_t shots = 20000;
        const SampleResult r = sample(s, shots, 100 + trial);
        std::uint64_t zeros = 0;
        for (const auto &[bits, k] : r.counts) {
            zeros += bits[0] == '0' ? k : 0;
        }
        const double p0 = 0.5 * (1.0 + expect_product(s, ProductObservable::pauli("ZIIIIII")));
        const double se = std::sqrt(std::max(p0 * (1 - p0), 1e-12) / shots);
        EXPECT_LE(std::abs(static_cast<double>(zeros) / shots - p0), 5 * se + 1e-12);
    }
}

TEST(Sample, RejectsZeroShots) {
    EXPECT_THROW(sample(init_zero(2), 0, 1), DomainError);
}

}  // namespace
}  // namespace mpsim
