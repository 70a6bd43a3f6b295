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

#ifndef FQC_SIM_APPLY_GATE_H
#define FQC_SIM_APPLY_GATE_H

#include "fqc/circuit/gate.h"
#include "fqc/sim/state_vector.h"

namespace fqc {

struct SimOptions {
    /// Largest population allowed to fall outside a boson cutoff before TruncationError.
    double leakage_tol = 1e-12;
};

/// Exact application of one gate, built from creation/annihilation primitives.
StateVector apply_gate(const StateVector &s, const Gate &g, const SimOptions &opt = {});
/// Fermionic exchange of two modes: p_a^+ <-> p_b^+.
StateVector apply_move_swap(const StateVector &s, uint32_t a, uint32_t b);

}  // namespace fqc

#endif
