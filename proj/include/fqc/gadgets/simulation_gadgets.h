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


#ifndef FQC_GADGETS_SIMULATION_GADGETS_H
#define FQC_GADGETS_SIMULATION_GADGETS_H

#include "fqc/circuit/circuit.h"

// Register convention for every gadget here: one qubit (q0) followed by the
// fermion modes the gadget touches.

namespace fqc {

/// theta * num / den, exact when theta is.
Angle scale_angle(const Angle &theta, int64_t num, int64_t den);

/// exp(-i eps t n) on f0 via the ancilla-qubit gadget: parity is copied onto
/// q0 (which must start and end in |0>), rotated there, and uncopied.
/// Multiples of pi/4 use the discrete qubit gate (T, S, Z and daggers).
Circuit controlled_phase_evolution(double epsilon, double t);

/// exp(-i Z (theta/2) (n_0 - 1/2)(n_1 - 1/2)) with Z on q0.
Circuit controlled_interaction(const Angle &theta);

/// exp(-(theta/2) Z gt_i g_j) with Z on q0.
Circuit controlled_braid(const Angle &theta, uint32_t i = 0, uint32_t j = 1);

/// exp(i alpha (p_i^+ p_j + h.c.)) from two arbitrary-angle braids; no qubit.
Circuit hopping(const Angle &alpha, uint32_t i = 0, uint32_t j = 1);

/// exp(i J dt Z (p_i^+ p_j + h.c.)) as two controlled braids.
Circuit controlled_hopping(double j_coupling, double dt, uint32_t i = 0, uint32_t j = 1);
Circuit controlled_hopping(const Angle &j_dt, uint32_t i = 0, uint32_t j = 1);

}  // namespace fqc

#endif
