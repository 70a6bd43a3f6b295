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


#include "fqc/gadgets/dual_rail.h"

#include "fqc/gadgets/simulation_gadgets.h"

namespace fqc {

DualRailGadgets dual_rail_gadgets() {
    DualRailGadgets g;
    const Registers regs{1, 2, {}};

    g.cnot_dr_control = Circuit(regs);
    g.cnot_dr_control.add(gates::h(0)).add(gates::czqf(0, 0)).add(gates::h(0));

    // (1 - X)(1 - Z) = 1 - X - Z + XZ; each term commutes with the others and the
    // constant is a global phase. X_DR = p_0^+ p_1 + h.c.
    g.cnot_q_control = Circuit(regs);
    g.cnot_q_control.add(gates::s(0));
    g.cnot_q_control.append(hopping(Angle::pi_fraction(-1, 4), 0, 1));
    g.cnot_q_control.append(controlled_hopping(Angle::pi_fraction(1, 4), 0, 1));

    g.swap = Circuit(regs);
    g.swap.append(g.cnot_q_control).append(g.cnot_dr_control).append(g.cnot_q_control);
    g.encode = g.swap;
    return g;
}

}  // namespace fqc
