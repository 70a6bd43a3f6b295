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

#ifndef FQC_PAIRING_EXPERIMENTS_H
#define FQC_PAIRING_EXPERIMENTS_H

#include <cstdint>
#include <vector>

#include "fqc/pairing/fit.h"
#include "fqc/pairing/pair_circuit.h"
#include "fqc/sim/tomography.h"

namespace fqc {

/// Protocol runs the molecule-assisted pulse sequence. Ideal substitutes the exact pairing gate
/// everywhere and serves as a closed-loop check of the tomography.
enum class PulseModel { Protocol, Ideal };

/// Molecule number distribution of the source mode before it is split.
struct MoleculeInput {
    double n = 0;
    MoleculeSource source = MoleculeSource::Fock;

    /// (occupation, weight) pairs; Poisson tails below 1e-13 are dropped and the rest renormalized.
    std::vector<std::pair<uint32_t, double>> weights() const;
    uint32_t max_occupation() const;
};

enum class Wiring { Same, Cross };
std::string to_string(Wiring w);
Wiring parse_wiring(const std::string &text);

/// theta_k = 2 pi k / points.
std::vector<double> theta_grid(size_t points = 16);

struct FringeData {
    MoleculeInput input;
    Wiring wiring = Wiring::Same;
    std::vector<double> theta;
    /// Both sites occupied: the fitted observable.
    std::vector<double> p_full;
    /// Both sites empty, reported alongside.
    std::vector<double> p_empty;
    FringeFit fit;

    nlohmann::json to_json() const;
};

/// Two pairing pulses with exp(-i theta n_0) in between. The source is split 50/50 into two modes, each
/// pulse is calibrated to the mean occupation N/2 of its mode. Same wiring drives both pulses from the
/// first mode, cross wiring drives the second pulse from the other mode.
FringeData ramsey(const MoleculeInput &input, const std::vector<double> &theta, Wiring wiring);

struct BellResult {
    uint32_t n1 = 0;
    uint32_t n2 = 0;
    PulseModel model = PulseModel::Protocol;
    /// Reconstructed state on {00, 11} and the exact target it is compared to.
    DensityMatrixOnSubspace rho;
    DensityMatrixOnSubspace target;
    double infidelity = 0;

    nlohmann::json to_json() const;
};

/// Prepares the pair with a pulse driven by the N2 mode and reads it out with no pulse or a pulse of phase
/// 0 or pi/2 driven by the N1 mode. Both modes come from one Fock state of N1 + N2 molecules.
BellResult bell_experiment(uint32_t n1, uint32_t n2, PulseModel model = PulseModel::Protocol);

struct ChoiResult {
    uint32_t n1 = 0;
    uint32_t n2 = 0;
    MoleculeSource source = MoleculeSource::Fock;
    PulseModel model = PulseModel::Protocol;
    DensityMatrixOnSubspace rho;
    double entanglement_fidelity = 0;
    /// 1 - (d F_e + 1)/(d + 1) with d = 2.
    double average_infidelity = 0;
    double entanglement_infidelity() const { return 1 - entanglement_fidelity; }

    nlohmann::json to_json() const;
};

/// Gate under test on sites (0,1) driven by the N2 mode; ancilla on sites (2,3). Tomography pulses on the
/// system are driven by the N1 mode, ancilla rotations are exact.
ChoiResult choi_experiment(uint32_t n1, uint32_t n2, MoleculeSource source = MoleculeSource::Fock,
                           PulseModel model = PulseModel::Protocol);

struct ChoiConvergence {
    std::vector<ChoiResult> steps;
    bool converged = false;
    const ChoiResult &result() const { return steps.back(); }

    nlohmann::json to_json() const;
};

/// Doubles N1 from n1_start until the entanglement infidelity changes by less than rel_tol relative.
ChoiConvergence choi_converged(uint32_t n2, MoleculeSource source, uint32_t n1_start, uint32_t n1_max,
                               double rel_tol = 0.05);

/// Reduced fermion state on {00, 11} after one pulse on vacuum, bosons traced out.
DensityMatrixOnSubspace single_pulse_density(uint32_t n);

/// Purity of the fermion state conditioned on the total molecule number being `total`.
double conditional_purity(uint32_t n, uint32_t total);

}  // namespace fqc

#endif
