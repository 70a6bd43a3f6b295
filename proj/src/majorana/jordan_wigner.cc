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

#include "fqc/majorana/jordan_wigner.h"

#include <stdexcept>

namespace fqc {

PauliString jordan_wigner(const MajoranaQubitString &s, uint32_t n_fermion_modes, uint32_t n_qubits) {
    PauliString out = PauliString().with_phase(s.phase());
    for (uint32_t eta : s.majoranas()) {
        MajoranaIndex m = MajoranaIndex::from_flat(eta);
        if (m.site >= n_fermion_modes) {
            throw std::out_of_range("majorana site " + std::to_string(m.site) + " outside " +
                                    std::to_string(n_fermion_modes) + " modes");
        }
        PauliString f;
        for (uint32_t j = 0; j < m.site; j++) {
            f = f * PauliString::single(n_qubits + j, PauliLetter::Z);
        }
        if (m.kind == MajoranaKind::Gamma) {
            f = f * PauliString::single(n_qubits + m.site, PauliLetter::X);
        } else {
            f = f * PauliString::single(n_qubits + m.site, PauliLetter::Y, Phase::minus_one());
        }
        out = out * f;
    }
    for (const auto &[q, l] : s.paulis()) {
        if (q >= n_qubits) {
            throw std::out_of_range("qubit " + std::to_string(q) + " outside " + std::to_string(n_qubits) + " qubits");
        }
        out = out * PauliString::single(q, l);
    }
    return out;
}

}  // namespace fqc
