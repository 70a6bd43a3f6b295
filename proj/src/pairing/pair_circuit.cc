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

#include "fqc/pairing/pair_circuit.h"

#include <algorithm>
#include <stdexcept>

namespace fqc {

std::string to_string(MoleculeSource s) { return s == MoleculeSource::Fock ? "fock" : "poisson"; }

MoleculeSource parse_source(const std::string &text) {
    if (text == "fock") return MoleculeSource::Fock;
    if (text == "poisson") return MoleculeSource::Poisson;
    throw std::invalid_argument("unknown molecule source: " + text);
}

void PairingConfig::validate() const {
    if (!(molecules >= 0)) throw std::invalid_argument("molecule number must be non-negative");
    if (sites < 2) throw std::invalid_argument("pairing needs at least two sites");
    if (cutoffs.empty()) throw std::invalid_argument("pairing needs a molecule reservoir");
}

Registers PairingConfig::registers() const {
    Registers r{0, 2 * sites, cutoffs};
    r.boson_cutoffs.push_back(*std::max_element(cutoffs.begin(), cutoffs.end()));
    return r;
}

FermionLabel PairingConfig::label(const std::string &site_pattern) const {
    if (site_pattern.size() != sites) throw std::invalid_argument("label length must equal the site count");
    return site_pattern + std::string(sites, '0');
}

Circuit pair_circuit(uint32_t i, uint32_t j, uint32_t m, const PairingConfig &cfg) {
    cfg.validate();
    if (i == j || i >= cfg.sites || j >= cfg.sites) throw std::invalid_argument("pair_circuit: bad sites");
    if (m >= cfg.cutoffs.size()) throw std::invalid_argument("pair_circuit: boson mode is not a reservoir");

    const uint32_t up = cfg.up(i);
    const uint32_t local = cfg.local_mode();
    const Angle half = Angle::pi_fraction(1, 2);
    Circuit c(cfg.registers());

    // Conjugation maps p_iup^+ -> i p_idown^+ and p_idown^+ -> i p_jdown^+, so the on-site
    // dissociation turns into the inter-site pair with an overall sign that flips -i into +i.
    c.add(gates::u_updown(up, i, half));
    c.add(gates::u_tdown(i, j, half));
    c.add(gates::bs(local, m, half));
    c.add(gates::u_diss(local, up, i, cfg.molecules, cfg.phi));
    c.add(gates::bs(local, m, -half));
    c.add(gates::zf(j)).add(gates::u_tdown(i, j, half)).add(gates::zf(j));
    c.add(gates::zf(i)).add(gates::u_updown(up, i, half)).add(gates::zf(i));
    return c;
}

}  // namespace fqc
