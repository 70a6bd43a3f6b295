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


#ifndef FQC_GADGETS_DUAL_RAIL_H
#define FQC_GADGETS_DUAL_RAIL_H

#include "fqc/circuit/circuit.h"

namespace fqc {

/// Dual-rail fermion qubit on f0, f1: |0> -> |01> (f1 occupied), |1> -> |10>.
/// All circuits act on q0, f0, f1.
struct DualRailGadgets {
    /// SWAP of q0 into a rail pair loaded in |01>; leaves q0 in |0>. Applying it
    /// again moves the state back.
    Circuit encode;
    /// Rail pair controls, q0 is the target: H CZqf(q0, f0) H.
    Circuit cnot_dr_control;
    /// q0 controls an X on the rail pair: exp(i pi/4 (1 - X_DR)(1 - Z)) from an S,
    /// a pi/4 hopping and a pi/4 controlled hopping.
    Circuit cnot_q_control;
    Circuit swap;
};

DualRailGadgets dual_rail_gadgets();

}  // namespace fqc

#endif
