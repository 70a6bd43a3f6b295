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

#ifndef FQC_PAIRING_PAIR_CIRCUIT_H
#define FQC_PAIRING_PAIR_CIRCUIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "fqc/circuit/circuit.h"
#include "fqc/sim/tomography.h"

namespace fqc {

enum class MoleculeSource { Fock, Poisson };

std::string to_string(MoleculeSource s);
MoleculeSource parse_source(const std::string &text);

/// Register layout shared by every pulse of one experiment.
///
/// Fermion modes 0..sites-1 are the public spinless sites (the down spin). Modes sites..2*sites-1 hold
/// the up partner of each site, used only inside the pulse sequence. Boson modes are the molecule
/// reservoirs followed by one local molecule mode that the sequence swaps molecules into.
struct PairingConfig {
    /// Occupation the dissociation pulse is calibrated to: N for a Fock mode, the mean otherwise.
    double molecules = 0;
    Angle phi;
    uint32_t sites = 2;
    std::vector<uint32_t> cutoffs;
    MoleculeSource source = MoleculeSource::Fock;

    void validate() const;
    uint32_t up(uint32_t site) const { return sites + site; }
    uint32_t local_mode() const { return static_cast<uint32_t>(cutoffs.size()); }
    Registers registers() const;
    /// Pads a pattern over the public sites with empty up modes.
    FermionLabel label(const std::string &site_pattern) const;
};

/// Molecule-assisted pairing exp(i pi/(4 sqrt N) (e^{i phi} b_m p_i^+ p_j^+ + h.c.)) as the seven-pulse
/// sequence: intra-site hop, inter-site hop, molecule swap into the local mode, dissociation, and the
/// inverses of the first three. Inverse hops are the forward hop conjugated by Zf.
Circuit pair_circuit(uint32_t i, uint32_t j, uint32_t m, const PairingConfig &cfg);

}  // namespace fqc

#endif
