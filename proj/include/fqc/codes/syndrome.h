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

#ifndef FQC_CODES_SYNDROME_H
#define FQC_CODES_SYNDROME_H

#include <string>
#include <vector>

#include "fqc/circuit/circuit.h"
#include "fqc/codes/stabilizer_code.h"

namespace fqc {

/// exp(-pi/4 eta_a eta_b) up to a global phase, for flat Majorana indices a != b.
Circuit majorana_rotation(uint32_t a, uint32_t b);

/// Applies an even pure-Majorana string (up to a global phase) as squared rotations.
Circuit string_circuit(const MajoranaQubitString &s);

/// |0><0| + |1><1| P on ancilla qubit `ancilla`, for a Hermitian even Majorana string P.
Circuit controlled_string(uint32_t ancilla, const MajoranaQubitString &p);

/// Record name for generator k in syndrome round r.
std::string syndrome_record(uint32_t round, size_t k);

/// Hadamard test per generator: ancilla qubit qubit_base + k, result in syndrome_record(round, k).
/// Outcome 0 means the generator reads +1. Ancillas are reset afterwards.
Circuit syndrome_circuit(const StabilizerCode &code, uint32_t round = 0, uint32_t qubit_base = 0);

}  // namespace fqc

#endif
