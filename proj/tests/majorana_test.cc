// Copyright 2026 <project authors>
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

#include <random>

#include <gtest/gtest.h>

#include "fqc/majorana/fermion_ops.h"
#include "fqc/majorana/jordan_wigner.h"
#include "fqc/majorana/majorana_string.h"
#include "fqc/majorana/operator_sum.h"
#include "oracle.h"

using namespace fqc;
using MQS = MajoranaQubitString;

namespace {

/// All strings with at most `max_w` Majoranas on `sites` modes, times every letter on one qubit.
std::vector<MQS> small_strings(uint32_t sites, size_t max_w, bool with_qubit) {
    std::vector<MQS> out;
    uint32_t n = 2 * sites;
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        if (static_cast<size_t>(__builtin_popcount(mask)) > max_w) continue;
        std::vector<uint32_t> eta;
        for (uint32_t k = 0; k < n; k++)
            if (mask >> k & 1) eta.push_back(k);
        MQS base = MQS::from_factors(eta);
        out.push_back(base);
        if (with_qubit) {
            for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) out.push_back(base * MQS::pauli(0, l));
        }
    }
    return out;
}

MQS random_string(std::mt19937_64 &rng, uint32_t sites, uint32_t qubits) {
    std::uniform_int_distribution<uint32_t> len(0, 6), eta(0, 2 * sites - 1), ph(0, 3), q(0, qubits), let(1, 3);
    std::vector<uint32_t> f(len(rng));
    for (auto &x : f) x = eta(rng);
    MQS s = MQS::from_factors(f, Phase::from_power(static_cast<int>(ph(rng))));
    for (uint32_t k = 0; k < qubits; k++) {
        uint32_t l = q(rng) % 4;
        if (l) s = s * MQS::pauli(k, static_cast<PauliLetter>(l));
    }
    return s;
}

}  // namespace

TEST(Phase, Arithmetic) {
    EXPECT_EQ(Phase::i() * Phase::i(), Phase::minus_one());
    EXPECT_EQ(Phase::minus_i().conj(), Phase::i());
    EXPECT_EQ(-Phase::one(), Phase::minus_one());
    for (int k = 0; k < 4; k++) {
        Phase p = Phase::from_power(k);
        EXPECT_EQ(Phase::parse(p.str()), p);
        EXPECT_EQ(Phase::from_complex(p.value()), p);
    }
    EXPECT_EQ(Phase::parse("i"), Phase::i());
}

TEST(MajoranaIndex, FlatteningIsABijection) {
    for (uint32_t eta = 0; eta < 64; eta++) EXPECT_EQ(MajoranaIndex::from_flat(eta).flat(), eta);
    EXPECT_EQ((MajoranaIndex{3, MajoranaKind::GammaTilde}).flat(), 7u);
}

TEST(Canonicalize, SwapAndCancel) {
    std::vector<uint32_t> a = {1, 0};
    MQS s = canonicalize(a, Phase::one());
    EXPECT_EQ(s.phase(), Phase::minus_one());
    EXPECT_EQ(s.majoranas(), (std::vector<uint32_t>{0, 1}));
    std::vector<uint32_t> b = {0, 0};
    EXPECT_TRUE(canonicalize(b, Phase::one()).is_identity());
    EXPECT_EQ(canonicalize(b, Phase::one()).phase(), Phase::one());
}

TEST(Canonicalize, RepeatedFactorAgainstDenseProduct) {
    std::vector<uint32_t> f = {3, 0, 3};
    MQS s = canonicalize(f, Phase::i());
    EXPECT_EQ(s.majoranas(), (std::vector<uint32_t>{0}));
    oracle::Space sp{0, 2, {}};
    oracle::Mat want = oracle::I * oracle::gamma_tilde(sp, 1) * oracle::gamma(sp, 0) * oracle::gamma_tilde(sp, 1);
    EXPECT_LT(oracle::max_abs(oracle::of(sp, s) - want), 1e-14);
    EXPECT_EQ(s.phase(), Phase::minus_i());
}

TEST(Canonicalize, AdjointMatchesReversal) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint32_t> len(0, 7), eta(0, 7), ph(0, 3);
    for (int t = 0; t < 500; t++) {
        std::vector<uint32_t> f(len(rng));
        for (auto &x : f) x = eta(rng);
        Phase p = Phase::from_power(static_cast<int>(ph(rng)));
        std::vector<uint32_t> r(f.rbegin(), f.rend());
        EXPECT_EQ(canonicalize(f, p).adjoint(), canonicalize(r, p.conj()));
    }
}

TEST(Multiply, Examples) {
    EXPECT_TRUE((MQS::gamma(0) * MQS::gamma(0)).is_identity());
    MQS d = MQS::gamma_tilde(0) * MQS::gamma(1);
    EXPECT_EQ(d.majoranas(), (std::vector<uint32_t>{1, 2}));
    EXPECT_EQ(d.phase(), Phase::one());
    MQS a = MQS::parse("i * gt0 g1");
    MQS b = MQS::parse("i * gt1 g2");
    oracle::Space sp{0, 3, {}};
    EXPECT_LT(oracle::max_abs(oracle::of(sp, a * b) - oracle::of(sp, a) * oracle::of(sp, b)), 1e-14);
}

TEST(Multiply, DenseHomomorphismAndAssociativity) {
    std::mt19937_64 rng(11);
    oracle::Space sp{2, 3, {}};
    for (int t = 0; t < 200; t++) {
        MQS a = random_string(rng, 3, 2), b = random_string(rng, 3, 2), c = random_string(rng, 3, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_LT(oracle::max_abs(oracle::of(sp, a * b) - oracle::of(sp, a) * oracle::of(sp, b)), 1e-13);
        MQS u = a * a.adjoint();
        EXPECT_TRUE(u.is_identity());
        EXPECT_EQ(u.phase(), Phase::one());
    }
}

TEST(Commutation, ExhaustiveSmallStrings) {
    auto all = small_strings(3, 3, true);
    for (const MQS &a : all) {
        for (const MQS &b : all) {
            MQS ab = a * b, ba = b * a;
            ASSERT_TRUE(ab.same_operator(ba));
            bool anti = ab.phase() == -ba.phase();
            ASSERT_TRUE(anti || ab.phase() == ba.phase());
            EXPECT_EQ(commutation_class(a, b) == Commutation::Anticommutes, anti) << a << " ; " << b;
        }
    }
}

TEST(Commutation, WorkedExamples) {
    EXPECT_EQ(commutation_class(MQS::gamma(0), MQS::gamma_tilde(0)), Commutation::Anticommutes);
    EXPECT_EQ(commutation_class(MQS::parse("g0 gt0"), MQS::parse("g1 gt1")), Commutation::Commutes);
    // Odd total parities on two disjoint 7-site blocks.
    std::vector<uint32_t> ga, gb;
    for (uint32_t i = 0; i < 7; i++) {
        ga.push_back(2 * i);
        gb.push_back(2 * (7 + i) + 1);
    }
    EXPECT_EQ(commutation_class(MQS::from_factors(ga), MQS::from_factors(gb)), Commutation::Anticommutes);
}

TEST(MajoranaString, TextRoundTrip) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; t++) {
        MQS s = random_string(rng, 4, 2);
        EXPECT_EQ(MQS::parse(s.str()), s) << s.str();
    }
    EXPECT_EQ(MQS::parse("-i * g0 gt2 | X:q1").str(), "-i * g0 gt2 | X:q1");
}

TEST(MajoranaString, HermitianAndSquares) {
    for (const MQS &s : small_strings(2, 4, true)) {
        oracle::Space sp{1, 2, {}};
        oracle::Mat m = oracle::of(sp, s);
        EXPECT_EQ(s.is_hermitian(), oracle::max_abs(m - m.adjoint()) < 1e-14);
        EXPECT_EQ(s.squares_to_one(), oracle::max_abs(m * m - oracle::identity(sp)) < 1e-14);
    }
}

TEST(JordanWigner, Examples) {
    EXPECT_EQ(jordan_wigner(MQS::gamma(0), 1).dense_str(1), "+X");
    // gt1 picks up the tail and our sign convention: -Z0 Y1.
    EXPECT_EQ(jordan_wigner(MQS::gamma_tilde(1), 2).dense_str(2), "-ZY");
    EXPECT_EQ(jordan_wigner(MQS::parse("i * g0 gt0"), 1).dense_str(1), "+Z");
    EXPECT_EQ(jordan_wigner(MQS::parity(0), 1).dense_str(1), "+Z");
    EXPECT_THROW(jordan_wigner(MQS::gamma(3), 2), std::out_of_range);
}

TEST(JordanWigner, MatchesDenseOperatorsAndIsAHomomorphism) {
    std::mt19937_64 rng(5);
    oracle::Space sp{1, 3, {}};
    for (int t = 0; t < 300; t++) {
        MQS a = random_string(rng, 3, 1), b = random_string(rng, 3, 1);
        PauliString ja = jordan_wigner(a, 3, 1), jb = jordan_wigner(b, 3, 1);
        EXPECT_LT(oracle::max_abs(oracle::of(sp, ja) - oracle::of(sp, a)), 1e-14);
        EXPECT_EQ(jordan_wigner(a * b, 3, 1), ja * jb);
    }
}

TEST(FermionOps, CanonicalAnticommutators) {
    oracle::Space sp{0, 3, {}};
    for (uint32_t i = 0; i < 3; i++) {
        EXPECT_LT(oracle::max_abs(oracle::of(sp, creation(i)) - oracle::create(sp, i)), 1e-14);
        EXPECT_LT(oracle::max_abs(oracle::of(sp, number(i)) - oracle::number(sp, i)), 1e-14);
        for (uint32_t j = 0; j < 3; j++) {
            OperatorSum ac = creation(i) * annihilation(j) + annihilation(j) * creation(i);
            EXPECT_TRUE(ac.approx_equal(OperatorSum::identity(i == j ? 1.0 : 0.0))) << ac.str();
        }
    }
    // 1 - 2n equals the parity string.
    OperatorSum z = OperatorSum::identity() - 2.0 * number(1);
    EXPECT_TRUE(z.approx_equal(OperatorSum(fermion_parity(1))));
    EXPECT_LT(oracle::max_abs(oracle::of(oracle::Space{2, 0, {}}, qubit_number(1)) - oracle::qnumber({2, 0, {}}, 1)), 1e-14);
}

TEST(OperatorSum, MergesAndPrunes) {
    OperatorSum a(1.0, MQS::gamma(0));
    a += OperatorSum(-1.0, MQS::gamma(0));
    EXPECT_TRUE(a.empty());
    OperatorSum b(2.0, MQS::parse("i * g0 g1"));
    EXPECT_NEAR(std::abs(b.coefficient(MQS::parse("g0 g1")) - std::complex<double>(0, 2)), 0, 1e-15);
    EXPECT_TRUE(b.as_string().has_value() == false);
    EXPECT_EQ(OperatorSum(MQS::parse("-i * g0 g1")).as_string()->str(), "-i * g0 g1");
}
