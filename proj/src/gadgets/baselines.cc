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


#include "fqc/gadgets/baselines.h"

#include "fqc/gadgets/simulation_gadgets.h"

namespace fqc {

Circuit qubit_hopping(const Angle &alpha, uint32_t a, uint32_t b) {
    // XX and YY commute. exp(-i beta ZZ) = CNOT exp(-i beta Z_b) CNOT and
    // exp(-i beta Z) = phase_q(-2 beta) up to a global phase.
    Circuit c(Registers{std::max(a, b) + 1, 0, {}});
    auto zz = [&] {
        c.add(gates::cnot(a, b)).add(gates::phase_q(b, -alpha)).add(gates::cnot(a, b));
    };
    c.add(gates::h(a)).add(gates::h(b));
    zz();
    c.add(gates::h(a)).add(gates::h(b));
    // S H maps Z to Y.
    c.add(gates::sdg(a)).add(gates::sdg(b)).add(gates::h(a)).add(gates::h(b));
    zz();
    c.add(gates::h(a)).add(gates::h(b)).add(gates::s(a)).add(gates::s(b));
    return c;
}

Circuit qubit_fswap(uint32_t a, uint32_t b) {
    Circuit c(Registers{std::max(a, b) + 1, 0, {}});
    c.add(gates::swap(a, b)).add(gates::cz(a, b));
    return c;
}

Circuit fswap_network_circuit(uint32_t n_modes, const Angle &alpha) {
    Circuit c(Registers{n_modes, 0, {}});
    for (uint32_t layer = 0; layer < n_modes; layer++) {
        for (uint32_t i = layer % 2; i + 1 < n_modes; i += 2) {
            c.append(qubit_hopping(alpha, i, i + 1));
            c.append(qubit_fswap(i, i + 1));
        }
    }
    return c;
}

ResourceReport fswap_network(uint32_t n_modes) { return count_resources(fswap_network_circuit(n_modes)); }

}  // namespace fqc
