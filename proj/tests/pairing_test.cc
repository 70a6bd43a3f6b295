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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fqc/circuit/resources.h"
#include "fqc/pairing/experiments.h"
#include "fqc/pairing/fit.h"
#include "fqc/pairing/pair_circuit.h"
#include "fqc/sim/measure.h"
#include "oracle.h"

using namespace fqc;
using oracle::I;
using oracle::Mat;
using oracle::Space;
using oracle::Vec;

namespace {

PairingConfig small_config(double n, Angle phi, uint32_t cutoff) {
    PairingConfig cfg;
    cfg.molecules = n;
    cfg.phi = phi;
    cfg.sites = 2;
    cfg.cutoffs = {cutoff};
    return cfg;
}

// Columns: every basis state with empty up modes and an empty local molecule mode.
Mat physical_inputs(const Space &sp, const PairingConfig &cfg) {
    std::vector<Vec> cols;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            for (uint32_t n = 0; n <= cfg.cutoffs[0]; n++) {
                cols.push_back(oracle::basis(sp, {{}, {a, b, 0, 0}, {n, 0}}));
            }
        }
    }
    Mat m(sp.dim(), static_cast<Eigen::Index>(cols.size()));
    for (size_t k = 0; k < cols.size(); k++) m.col(static_cast<Eigen::Index>(k)) = cols[k];
    return m;
}

}  // namespace

TEST(PairCircuit, SevenPulsesMatchTheMoleculePairingGate) {
    for (double n : {1.0, 2.5, 3.0}) {
        for (double phi : {0.0, -2.0}) {
            PairingConfig cfg = small_config(n, Angle::radians(phi), 2);
            Circuit c = pair_circuit(0, 1, 0, cfg);
            EXPECT_EQ(c.registers, cfg.registers());
            Space sp = Space::of(c.registers);
            // Target exp(i pi/(4 sqrt N) (e^{i phi} b p_0^+ p_1^+ + h.c.)) built directly.
            Mat a = std::polar(1.0, phi) * oracle::boson_create(sp, 0).adjoint() * oracle::create(sp, 0) *
                    oracle::create(sp, 1);
            Mat want = oracle::expm(I * (M_PI / (4 * std::sqrt(n))) * (a + a.adjoint()));
            Mat in = physical_inputs(sp, cfg);
            Mat got = oracle::circuit(sp, c) * in;
            EXPECT_LT(oracle::max_abs(got - want * in), 1e-10) << n << " " << phi;
        }
    }
}

TEST(PairCircuit, SequenceShape) {
    Circuit c = pair_circuit(0, 1, 0, small_config(4, Angle(), 4));
    size_t zf = 0;
    std::vector<GateKind> pulses;
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::Zf) {
            zf++;
        } else {
            pulses.push_back(g.kind);
        }
    }
    EXPECT_EQ(pulses, (std::vector<GateKind>{GateKind::UUpDown, GateKind::UTDown, GateKind::BS, GateKind::UDiss,
                                             GateKind::BS, GateKind::UTDown, GateKind::UUpDown}));
    EXPECT_EQ(zf, 4u);
    EXPECT_THROW(pair_circuit(0, 0, 0, small_config(4, Angle(), 4)), std::invalid_argument);
    EXPECT_THROW(pair_circuit(0, 1, 1, small_config(4, Angle(), 4)), std::invalid_argument);
}

TEST(PairCircuit, NoMoleculesActsAsIdentity) {
    PairingConfig cfg = small_config(0, Angle(), 2);
    Space sp = Space::of(cfg.registers());
    Mat in = physical_inputs(sp, cfg);
    EXPECT_LT(oracle::max_abs(oracle::circuit(sp, pair_circuit(0, 1, 0, cfg)) * in - in), 1e-12);
}

TEST(PairCircuit, OneMoleculeHandComputed) {
    // |00; 1> -> cos(pi/4)|00; 1> + i e^{i phi} sin(pi/4) p_0^+ p_1^+ |00; 0>, and p_0^+ p_1^+ = -|11>.
    const double phi = 0.3;
    PairingConfig cfg = small_config(1, Angle::radians(phi), 1);
    Layout l = Layout::from(cfg.registers());
    StateVector s = StateVector::basis_state(l, {{}, {0, 0, 0, 0}, {1, 0}});
    StateVector out = apply_circuit(s, pair_circuit(0, 1, 0, cfg));
    StateVector full = StateVector::basis_state(l, {{}, {1, 1, 0, 0}, {0, 0}});
    EXPECT_NEAR(std::abs(s.inner(out) - std::sqrt(0.5)), 0, 1e-12);
    EXPECT_NEAR(std::abs(full.inner(out) + I * std::polar(1.0, phi) * std::sqrt(0.5)), 0, 1e-12);
    out.prune(1e-14);
    EXPECT_EQ(out.support_size(), 2u);
}

TEST(Fit, RecoversFringeAndPowerLaw) {
    auto th = theta_grid(16);
    std::vector<double> p;
    for (double t : th) p.push_back(0.5 + 0.5 * (0.8 * std::cos(t) - 0.1));
    FringeFit f = fit_fringe(th, p);
    EXPECT_NEAR(f.contrast, 0.8, 1e-12);
    EXPECT_NEAR(f.offset, 0.1, 1e-12);
    EXPECT_LT(f.residual, 1e-12);
    p[3] += 0.01;
    EXPECT_GT(fit_fringe(th, p).residual, 1e-4);

    std::vector<double> x = {10, 20, 50, 100}, y;
    for (double v : x) y.push_back(3 / v);
    PowerLaw pl = fit_power_law(x, y);
    EXPECT_NEAR(pl.exponent, -1, 1e-12);
    EXPECT_NEAR(pl.prefactor, 3, 1e-10);
}

TEST(Ramsey, NoMoleculesNoContrast) {
    FringeData d = ramsey({0, MoleculeSource::Fock}, theta_grid(16), Wiring::Same);
    EXPECT_LT(std::abs(d.fit.contrast), 1e-6);
    for (double v : d.p_full) EXPECT_LT(v, 1e-12);
    EXPECT_THROW(ramsey({0, MoleculeSource::Fock}, theta_grid(8), Wiring::Same), std::invalid_argument);
}

TEST(Ramsey, ContrastApproachesOneAsInverseN) {
    const std::vector<double> ns = {10, 20, 50, 100, 200};
    for (Wiring w : {Wiring::Same, Wiring::Cross}) {
        std::vector<double> miss, off;
        for (double n : ns) {
            FringeData d = ramsey({n, MoleculeSource::Fock}, theta_grid(16), w);
            for (size_t k = 0; k < d.theta.size(); k++) {
                EXPECT_GE(d.p_full[k], -1e-12);
                EXPECT_LE(d.p_full[k] + d.p_empty[k], 1 + 1e-12);
            }
            EXPECT_LT(d.fit.residual, 1e-10);
            miss.push_back(1 - d.fit.contrast);
            off.push_back(d.fit.offset);
        }
        EXPECT_NEAR(fit_power_law(ns, miss).exponent, -1, 0.15) << to_string(w);
        EXPECT_NEAR(fit_power_law(ns, off).exponent, -1, 0.15) << to_string(w);
    }
}

TEST(Ramsey, PoissonSourceStillShowsFringes) {
    FringeData d = ramsey({50, MoleculeSource::Poisson}, theta_grid(16), Wiring::Cross);
    EXPECT_GT(d.fit.contrast, 0.95);
    EXPECT_LT(d.fit.residual, 1e-10);
}

TEST(Bell, ExactPreparationClosesTheLoop) {
    BellResult r = bell_experiment(0, 0, PulseModel::Ideal);
    EXPECT_LT(r.infidelity, 1e-9);
    EXPECT_NEAR(r.rho.trace(), 1, 1e-12);
}

TEST(Bell, InfidelityFallsAsInverseN2) {
    BellResult r = bell_experiment(1600, 20);
    EXPECT_GT(r.infidelity, 1e-4);
    EXPECT_LT(r.infidelity, 3e-3);
    EXPECT_LT(r.rho.hermiticity_error(), 1e-10);
    std::vector<double> n2 = {10, 20, 40}, inf;
    for (double n : n2) inf.push_back(bell_experiment(3200, static_cast<uint32_t>(n)).infidelity);
    EXPECT_NEAR(fit_power_law(n2, inf).exponent, -1, 0.3);
}

TEST(Choi, ExactGateClosesTheLoop) {
    ChoiResult r = choi_experiment(0, 0, MoleculeSource::Fock, PulseModel::Ideal);
    EXPECT_LT(r.entanglement_infidelity(), 1e-9);
    EXPECT_LT(std::abs(r.average_infidelity), 1e-9);
}

TEST(Choi, HundredMoleculesConverged) {
    ChoiConvergence c = choi_converged(100, MoleculeSource::Fock, 100, 6400);
    ASSERT_TRUE(c.converged);
    EXPECT_LE(c.result().average_infidelity, 2e-3);
    EXPECT_NEAR(c.result().average_infidelity, 2.0 / 3.0 * c.result().entanglement_infidelity(), 1e-12);
    // Linear inversion with imperfect readout pulses may leave slightly negative eigenvalues.
    EXPECT_GT(c.result().rho.min_eigenvalue(), -1e-3);
}

TEST(Choi, PoissonMatchesFockAtSmallN2) {
    ChoiResult f = choi_experiment(400, 5, MoleculeSource::Fock);
    ChoiResult p = choi_experiment(400, 5, MoleculeSource::Poisson);
    EXPECT_LT(std::abs(p.entanglement_infidelity() - f.entanglement_infidelity()), 0.05 * f.entanglement_infidelity());
}

TEST(Invariants, ReducedStateIsDiagonalAfterOnePulse) {
    for (uint32_t n : {4u, 10u, 40u}) {
        DensityMatrixOnSubspace d = single_pulse_density(n);
        EXPECT_LT(std::abs(d.matrix(0, 1)), 1e-12);
        EXPECT_NEAR(d.trace(), 1, 1e-12);
        EXPECT_GT(d.matrix(1, 1).real(), 0.3);
        EXPECT_NEAR(conditional_purity(n, n), 1, 1e-12);
        EXPECT_NEAR(conditional_purity(n, n - 1), 1, 1e-12);
    }
}

TEST(Determinism, RepeatedRunsAreIdentical) {
    auto a = ramsey({20, MoleculeSource::Poisson}, theta_grid(16), Wiring::Cross).to_json().dump();
    auto b = ramsey({20, MoleculeSource::Poisson}, theta_grid(16), Wiring::Cross).to_json().dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(bell_experiment(100, 10).to_json().dump(), bell_experiment(100, 10).to_json().dump());
}
