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

#include "fqc/circuit/braid_variants.h"
#include "fqc/circuit/circuit_json.h"
#include "fqc/circuit/conjugate.h"
#include "fqc/circuit/resources.h"
#include "oracle.h"

using namespace fqc;
using MQS = MajoranaQubitString;

namespace {

const oracle::Space kSpace{2, 3, {}};

OperatorSum S(const std::string &text) { return OperatorSum(MQS::parse(text)); }

/// Every placement of a gate kind on 2 qubits + 3 fermion modes.
std::vector<Gate> placements(GateKind k, Angle angle) {
    const auto &sig = gate_info(k).signature;
    std::vector<Gate> out;
    std::vector<uint32_t> cur;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == sig.size()) {
            out.push_back(Gate{k, cur, angle, 0});
            return;
        }
        uint32_t n = sig[pos] == RegisterKind::Qubit ? kSpace.nq : kSpace.nf;
        for (uint32_t t = 0; t < n; t++) {
            bool clash = false;
            for (size_t p = 0; p < pos; p++) clash = clash || (sig[p] == sig[pos] && cur[p] == t);
            if (clash) continue;
            cur.push_back(t);
            rec(pos + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<MQS> single_factors() {
    std::vector<MQS> out;
    for (uint32_t f = 0; f < kSpace.nf; f++) {
        out.push_back(MQS::gamma(f));
        out.push_back(MQS::gamma_tilde(f));
    }
    for (uint32_t q = 0; q < kSpace.nq; q++)
        for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) out.push_back(MQS::pauli(q, l));
    return out;
}

double dense_deviation(const Gate &g, const OperatorSum &s) {
    oracle::Mat u = oracle::gate(kSpace, g);
    return oracle::max_abs(oracle::of(kSpace, conjugate(g, s)) - u.adjoint() * oracle::of(kSpace, s) * u);
}

bool symbolic_kind(GateKind k) { return !touches_boson(Gate{k, {}, {}, 0}) && k != GateKind::UDiss && k != GateKind::Pair; }

}  // namespace

// Rows of the transformation table, written with 0-based sites (i = 0, j = 1) and qubit 0.
TEST(TableRows, ExplicitImages) {
    const double r = 1 / std::sqrt(2.0);
    struct Row {
        Gate g;
        std::string in;
        OperatorSum out;
    };
    std::vector<Row> rows = {
        {gates::tf(0), "g0", r * (S("gt0") + S("g0"))},
        {gates::tf(0), "gt0", r * (S("gt0") - S("g0"))},
        {gates::sf(0), "g0", S("gt0")},
        {gates::sf(0), "gt0", S("-1 * g0")},
        {gates::zf(0), "g0", S("-1 * g0")},
        {gates::zf(0), "gt0", S("-1 * gt0")},
        {gates::h(0), "| Z:q0", S("| X:q0")},
        {gates::h(0), "| X:q0", S("| Z:q0")},
        {gates::z(0), "| X:q0", S("-1 * | X:q0")},
        {gates::braid(0, 1), "gt0", S("-1 * g1")},
        {gates::braid(0, 1), "g1", S("gt0")},
        {gates::braid(0, 1), "g0", S("g0")},
        {gates::braid(0, 1), "gt1", S("gt1")},
        {gates::czf(0, 1), "g0", S("g0") * OperatorSum(MQS::parity(1))},
        {gates::czf(0, 1), "gt0", S("gt0") * OperatorSum(MQS::parity(1))},
        {gates::czf(0, 1), "g1", S("g1") * OperatorSum(MQS::parity(0))},
        {gates::czf(0, 1), "gt1", S("gt1") * OperatorSum(MQS::parity(0))},
        {gates::czqf(0, 1), "g1", S("| Z:q0") * S("g1")},
        {gates::czqf(0, 1), "gt1", S("| Z:q0") * S("gt1")},
        {gates::czqf(0, 1), "| Z:q0", S("| Z:q0")},
        {gates::czqf(0, 1), "| X:q0", OperatorSum(MQS::parity(1)) * S("| X:q0")},
    };
    for (const Row &row : rows) {
        OperatorSum got = conjugate(row.g, MQS::parse(row.in));
        EXPECT_TRUE(got.approx_equal(row.out, 1e-15)) << row.g.str() << " on " << row.in << ": " << got.str();
        EXPECT_LT(dense_deviation(row.g, S(row.in)), 1e-10) << row.g.str() << " on " << row.in;
    }
    // The parity string is the fermionic Z: 1 - 2n.
    EXPECT_EQ(MQS::parity(0).str(), "+i * g0 gt0");
}

TEST(TableRows, ExhaustiveAgainstDenseConjugation) {
    std::vector<Angle> angles = {Angle::pi_fraction(1, 2), Angle::pi_fraction(1), Angle::pi_fraction(-1, 4),
                                 Angle::radians(0.37), Angle::radians(-1.3)};
    auto factors = single_factors();
    size_t checked = 0;
    double worst = 0;
    for (GateKind k : all_gate_kinds()) {
        if (!symbolic_kind(k)) continue;
        const auto &info = gate_info(k);
        for (const Angle &a : info.has_angle ? angles : std::vector<Angle>{Angle()}) {
            for (const Gate &g : placements(k, a)) {
                for (const MQS &s : factors) {
                    double d = dense_deviation(g, OperatorSum(s));
                    worst = std::max(worst, d);
                    EXPECT_LT(d, 1e-10) << g.str() << " on " << s;
                    checked++;
                }
            }
        }
    }
    EXPECT_GT(checked, 1000u);
    RecordProperty("worst_deviation", std::to_string(worst));
}

TEST(Conjugate, ProductsAndSumsAgainstDense) {
    std::mt19937_64 rng(17);
    auto factors = single_factors();
    std::uniform_int_distribution<size_t> pick(0, factors.size() - 1);
    for (GateKind k : all_gate_kinds()) {
        if (!symbolic_kind(k)) continue;
        for (const Gate &g : placements(k, Angle::radians(0.81))) {
            MQS s = factors[pick(rng)] * factors[pick(rng)] * factors[pick(rng)];
            OperatorSum sum = OperatorSum(s) + std::complex<double>(0.3, -0.2) * OperatorSum(factors[pick(rng)]);
            EXPECT_LT(dense_deviation(g, sum), 1e-10) << g.str() << " on " << sum.str();
        }
    }
}

TEST(Conjugate, CliffordClosureGivesSingleTerms) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> kind(0, 7), site(0, 2), q(0, 1);
    for (int t = 0; t < 200; t++) {
        Circuit c(Registers{2, 3, {}});
        for (int n = 0; n < 12; n++) {
            uint32_t a = site(rng), b = (a + 1 + site(rng) % 2) % 3;
            switch (kind(rng)) {
                case 0: c.add(gates::braid(a, b)); break;
                case 1: c.add(gates::czf(a, b)); break;
                case 2: c.add(gates::czqf(q(rng), a)); break;
                case 3: c.add(gates::sf(a)); break;
                case 4: c.add(gates::zf(a)); break;
                case 5: c.add(gates::h(q(rng))); break;
                case 6: c.add(gates::s(q(rng))); break;
                default: c.add(gates::z(q(rng))); break;
            }
        }
        MQS s = MQS::gamma(site(rng)) * MQS::pauli(q(rng), PauliLetter::Y);
        OperatorSum out = conjugate_circuit(c, s);
        ASSERT_EQ(out.size(), 1u);
        oracle::Mat u = oracle::circuit(kSpace, c);
        EXPECT_LT(oracle::max_abs(oracle::of(kSpace, out) - u.adjoint() * oracle::of(kSpace, s) * u), 1e-10);
    }
}

TEST(Conjugate, EmptyCircuitAndUnsupportedGates) {
    Circuit c = Circuit::fermions(2);
    EXPECT_EQ(conjugate_circuit(c, MQS::gamma(1)).as_string()->str(), "+1 * g1");
    Gate diss = gates::u_diss(0, 0, 1, 10);
    EXPECT_FALSE(supports_symbolic(diss));
    EXPECT_THROW(conjugate(diss, MQS::gamma(0)), SymbolicError);
    EXPECT_THROW(conjugate(gates::bs(0, 1, Angle::pi_fraction(1, 4)), MQS::gamma(0)), SymbolicError);
    Circuit m = Circuit::fermions(1);
    m.measure(fqc::fermion(0), "m");
    EXPECT_THROW(conjugate_circuit(m, MQS::gamma(0)), std::exception);
}

TEST(Conjugate, CorruptionNegatesTheChosenRule) {
    ConjugationOptions bad;
    bad.corrupt_kind = GateKind::Braid;
    EXPECT_EQ(conjugate(gates::braid(0, 1), MQS::gamma_tilde(0), bad).as_string()->str(), "+1 * g1");
    // Operators the gate leaves alone are not touched.
    EXPECT_EQ(conjugate(gates::braid(0, 1), MQS::gamma(0), bad).as_string()->str(), "+1 * g0");
    EXPECT_EQ(conjugate(gates::sf(0), MQS::gamma(0), bad).as_string()->str(), "+1 * gt0");
}

TEST(Conjugate, MoveSwapRelabelsModes) {
    Circuit c = Circuit::fermions(3);
    c.move_swap(0, 2);
    for (const MQS &s : single_factors()) {
        if (!s.paulis().empty()) continue;
        oracle::Space sp{0, 3, {}};
        oracle::Mat u = oracle::circuit(sp, c);
        EXPECT_LT(oracle::max_abs(oracle::of(sp, conjugate_circuit(c, s)) - u.adjoint() * oracle::of(sp, s) * u), 1e-12)
            << s;
    }
}

TEST(BraidVariants, MatchTargetUnitaries) {
    oracle::Space sp{0, 2, {}};
    auto g = [&](uint32_t f) { return oracle::gamma(sp, f); };
    auto gt = [&](uint32_t f) { return oracle::gamma_tilde(sp, f); };
    oracle::Mat tt = oracle::expm(-M_PI / 4 * gt(0) * gt(1));
    oracle::Mat pp = oracle::expm(-M_PI / 4 * g(0) * g(1));
    oracle::Mat bd = oracle::gate(sp, gates::braid(0, 1)).adjoint();
    EXPECT_LT(oracle::phase_distance(oracle::circuit(sp, braid_variant(BraidVariant::TildeTilde, 0, 1)), tt), 1e-10);
    EXPECT_LT(oracle::phase_distance(oracle::circuit(sp, braid_variant(BraidVariant::PlainPlain, 0, 1)), pp), 1e-10);
    EXPECT_LT(oracle::phase_distance(oracle::circuit(sp, braid_variant(BraidVariant::Inverse, 0, 1)), bd), 1e-10);
    Circuit inv = braid_variant(BraidVariant::Inverse, 0, 1);
    EXPECT_EQ(inv.ops.size(), 3u);
    inv.add(gates::braid(0, 1));
    EXPECT_LT(oracle::phase_distance(oracle::circuit(sp, inv), oracle::identity(sp)), 1e-10);
    EXPECT_EQ(conjugate_circuit(braid_variant(BraidVariant::TildeTilde, 0, 1), MQS::gamma_tilde(0)).as_string()->str(),
              "-1 * gt1");
    EXPECT_THROW(braid_variant(BraidVariant::Inverse, 1, 1), std::invalid_argument);
    // The Majorana form of the braid agrees with the creation-operator form.
    EXPECT_LT(oracle::max_abs(oracle::gate(sp, gates::braid(0, 1)) - oracle::expm(-M_PI / 4 * gt(0) * g(1))), 1e-12);
    EXPECT_LT(oracle::max_abs(oracle::gate(sp, gates::braid(0, 1)) - (oracle::identity(sp) - gt(0) * g(1)) / std::sqrt(2.0)),
              1e-12);
}

TEST(Gates, InverseUndoesEveryKind) {
    for (GateKind k : all_gate_kinds()) {
        if (!symbolic_kind(k)) continue;
        for (const Gate &g : placements(k, Angle::radians(0.6))) {
            Circuit c(Registers{2, 3, {}});
            c.add(g);
            c.add(inverse(g));
            EXPECT_LT(oracle::phase_distance(oracle::circuit(kSpace, c), oracle::identity(kSpace)), 1e-10) << g.str();
        }
    }
}

TEST(Gates, CliffordClassification) {
    EXPECT_TRUE(is_clifford(gates::braid(0, 1)));
    EXPECT_FALSE(is_clifford(gates::tf(0)));
    EXPECT_TRUE(is_clifford(gates::phase_f(0, Angle::pi_fraction(3, 2))));
    EXPECT_FALSE(is_clifford(gates::phase_f(0, Angle::pi_fraction(1, 4))));
    EXPECT_FALSE(is_clifford(gates::phase_f(0, Angle::radians(M_PI / 2))));  // inexact angles are never Clifford
    EXPECT_TRUE(is_clifford(gates::czf_theta(0, 1, Angle::pi_fraction(-1))));
    EXPECT_FALSE(is_clifford(gates::czf_theta(0, 1, Angle::pi_fraction(1, 2))));
    EXPECT_TRUE(is_braid_class(gates::braid_dag(0, 1)));
    EXPECT_THROW(validate(Gate{GateKind::Braid, {1, 1}, {}, 0}), std::invalid_argument);
    EXPECT_THROW(validate(Gate{GateKind::Braid, {1}, {}, 0}), std::invalid_argument);
}

TEST(Angle, ExactFractionsAndText) {
    Angle a = Angle::pi_fraction(6, 8);
    EXPECT_EQ(a.str(), "pi*3/4");
    EXPECT_EQ(Angle::parse("pi*3/4"), a);
    EXPECT_EQ(Angle::parse("-pi/2"), Angle::pi_fraction(-1, 2));
    EXPECT_TRUE((a + Angle::pi_fraction(1, 4)).is_multiple_of_pi(1, 1));
    Angle r = Angle::radians(0.1);
    EXPECT_EQ(Angle::parse(r.str()).radians(), 0.1);
}

TEST(CircuitJson, RoundTrip) {
    Circuit c(Registers{1, 3, {5}});
    c.add(gates::braid(0, 2)).add(gates::phase_f(1, Angle::radians(0.25))).add(gates::u_diss(0, 1, 2, 5, Angle::pi_fraction(1, 2)));
    c.measure(fqc::qubit(0), "m0");
    c.conditioned({{"m0", 1}}, gates::zf(1));
    c.reset(fqc::fermion(0));
    c.move_swap(0, 1);
    nlohmann::json j = to_json(c);
    Circuit back = circuit_from_json(j);
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(j["ops"][0]["kind"], "BRAID");
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"registers":{"qubits":0,"fermions":1},"ops":[{"kind":"NOPE","targets":["f0"]}]})")),
                 std::exception);
}

TEST(Circuit, ValidationRejectsBadOps) {
    Circuit c = Circuit::fermions(2);
    c.add(gates::braid(0, 2));
    EXPECT_THROW(c.validate(), std::exception);
    Circuit d = Circuit::fermions(2);
    d.conditioned({{"never", 1}}, gates::zf(0));
    EXPECT_THROW(d.validate(), std::exception);
}

TEST(Resources, CountsAndDepth) {
    Circuit one = Circuit::fermions(2);
    one.add(gates::braid(0, 1));
    ResourceReport r = count_resources(one);
    EXPECT_EQ(r.depth, 1u);
    EXPECT_EQ(r.cliffords, 1u);
    EXPECT_EQ(r.braids, 1u);

    Circuit c = Circuit::fermions(4);
    c.add(gates::tf(0)).add(gates::tf(1)).add(gates::braid(0, 1)).add(gates::tf(2));
    c.move_swap(2, 3);
    c.add(gates::tf(3));
    r = count_resources(c);
    EXPECT_EQ(r.gates, 5u);
    EXPECT_EQ(r.rotations, 4u);
    EXPECT_EQ(r.swaps, 1u);
    EXPECT_EQ(r.depth, 2u);
    EXPECT_EQ(r.rotation_depth, 2u);
    ResourceOptions priced;
    priced.swaps_cost_depth = true;
    EXPECT_EQ(count_resources(c, priced).depth, 3u);
    EXPECT_LE(r.depth, c.ops.size());
}
