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


#ifndef FQC_GADGETS_BASELINES_H
#define FQC_GADGETS_BASELINES_H

#include "fqc/circuit/circuit.h"
#include "fqc/circuit/resources.h"

namespace fqc {

/// exp(-i (alpha/2)(XX + YY)) on qubits a, b.
Circuit qubit_hopping(const Angle &alpha, uint32_t a, uint32_t b);

/// fSWAP = SWAP * CZ.
Circuit qubit_fswap(uint32_t a, uint32_t b);

/// One Trotter step of all-to-all hopping on N Jordan-Wigner qubits with an
/// fSWAP network: N layers of (hopping, fSWAP) on alternating neighbour pairs.
/// Every pair meets exactly once and the mode order ends reversed.
Circuit fswap_network_circuit(uint32_t n_modes, const Angle &alpha = Angle::radians(0.1));
ResourceReport fswap_network(uint32_t n_modes);

}  // namespace fqc

#endif
