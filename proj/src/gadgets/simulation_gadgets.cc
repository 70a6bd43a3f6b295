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


#include "fqc/gadgets/simulation_gadgets.h"

#include <cmath>

#include "fqc/circuit/braid_variants.h"

namespace fqc {

namespace {

Circuit with_control(uint32_t fermions) { return Circuit(Registers{1, fermions, {}}); }

// X on q0 conditioned on the parity of f: H CZqf H.
void copy_parity(Circuit &c, uint32_t f) { c.add(gates::h(0)).add(gates::czqf(0, f)).add(gates::h(0)); }

}  // namespace

Angle scale_angle(const Angle &theta, int64_t num, int64_t den) {
    if (auto f = theta.fraction()) return Angle::pi_fraction(f->first * num, f->second * den);
    return Angle::radians(theta.radians() * static_cast<double>(num) / static_cast<double>(den));
}

Circuit controlled_phase_evolution(double epsilon, double t) {
    const double theta = epsilon * t;
    Circuit c = with_control(1);
    copy_parity(c, 0);
    // phase_q(theta) = exp(-i theta n^q); snap to the discrete gate when possible.
    const double eighths = theta / (M_PI / 4);
    const double k_real = std::round(eighths);
    if (std::abs(eighths - k_real) < 1e-12) {
        int k = ((static_cast<int>(k_real) % 8) + 8) % 8;
        switch (k) {
            case 0: break;
            case 1: c.add(gates::tdg(0)); break;
            case 2: c.add(gates::sdg(0)); break;
            case 4: c.add(gates::z(0)); break;
            case 6: c.add(gates::s(0)); break;
            case 7: c.add(gates::t(0)); break;
            default: c.add(gates::phase_q(0, Angle::pi_fraction(k, 4))); break;
        }
    } else {
        c.add(gates::phase_q(0, Angle::radians(theta)));
    }
    copy_parity(c, 0);
    return c;
}

Circuit controlled_interaction(const Angle &theta) {
    // CZqf_0 CZqf_1 conjugates X into (-1)^(n_0 + n_1) X = 4 (n_0 - 1/2)(n_1 - 1/2) X;
    // the outer H turns X into Z.
    Circuit c = with_control(2);
    c.add(gates::h(0)).add(gates::czqf(0, 0)).add(gates::czqf(0, 1));
    c.add(gates::xrot(0, scale_angle(theta, 1, 4)));
    c.add(gates::czqf(0, 1)).add(gates::czqf(0, 0)).add(gates::h(0));
    return c;
}

Circuit controlled_braid(const Angle &theta, uint32_t i, uint32_t j) {
    // exp(-i (theta/2) Z Z^f_i) = CNOT_{f->q} phase_q(-theta) CNOT_{f->q} up to a
    // global phase. Conjugating by exp(-pi/4 g_i g_j) sends g_i to g_j, which turns
    // Z^f_i = i g_i gt_i into -i gt_i g_j.
    Circuit spread = braid_variant(BraidVariant::PlainPlain, i, j);
    Circuit c = with_control(std::max(i, j) + 1);
    c.append(spread.inverse());
    copy_parity(c, i);
    c.add(gates::phase_q(0, -theta));
    copy_parity(c, i);
    c.append(spread);
    return c;
}

Circuit hopping(const Angle &alpha, uint32_t i, uint32_t j) {
    // p_i^+ p_j + h.c. = (i/2)(gt_i g_j + gt_j g_i), two commuting terms.
    Circuit c = Circuit::fermions(std::max(i, j) + 1);
    c.add(gates::braid_theta(i, j, alpha)).add(gates::braid_theta(j, i, alpha));
    return c;
}

Circuit controlled_hopping(const Angle &j_dt, uint32_t i, uint32_t j) {
    Circuit c = controlled_braid(j_dt, i, j);
    c.append(controlled_braid(j_dt, j, i));
    return c;
}

Circuit controlled_hopping(double j_coupling, double dt, uint32_t i, uint32_t j) {
    return controlled_hopping(Angle::radians(j_coupling * dt), i, j);
}

}  // namespace fqc
