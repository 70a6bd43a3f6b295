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

#ifndef FQC_MAJORANA_JORDAN_WIGNER_H
#define FQC_MAJORANA_JORDAN_WIGNER_H

#include "fqc/majorana/majorana_string.h"
#include "fqc/majorana/pauli_string.h"

namespace fqc {

/// Qubit image of a Majorana-qubit string.
///
/// Wires 0..n_qubits-1 carry the qubit registers and wire n_qubits+i carries fermion mode i.
/// gamma_i -> Z..Z X_i and gamma~_i -> -Z..Z Y_i, so that occupation sits on |1>.
PauliString jordan_wigner(const MajoranaQubitString &s, uint32_t n_fermion_modes, uint32_t n_qubits = 0);

}  // namespace fqc

#endif
