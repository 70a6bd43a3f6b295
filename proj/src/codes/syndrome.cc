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

#include "fqc/codes/syndrome.h"

#include <stdexcept>

#include "fqc/circuit/braid_variants.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;

void require_majorana_only(const MQS &s) {
    if (!s.paulis().empty()) {
        throw std::invalid_argument("string " + s.str() + " has qubit factors");
    }
    if (s.is_fermionic()) {
        throw std::invalid_argument("string " + s.str() + " has odd Majorana weight");
    }
}

}  // namespace

Circuit majorana_rotation(uint32_t a, uint32_t b) {
    if (a == b) {
        throw std::invalid_argument("rotation needs two distinct Majoranas");
    }
    if (a > b) {
        // eta_a eta_b = -eta_b eta_a
        return majorana_rotation(b, a).inverse();
    }
    uint32_t i = a / 2, j = b / 2;
    bool ta = a & 1, tb = b & 1;
    Circuit c = Circuit::fermions(j + 1);
    if (i == j) {
        // gamma gamma~ = -i Z^f
        c.add(gates::sf_dag(i));
    } else if (ta && !tb) {
        c.add(gates::braid(i, j));
    } else if (!ta && !tb) {
        c = braid_variant(BraidVariant::PlainPlain, i, j);
    } else if (ta && tb) {
        c = braid_variant(BraidVariant::TildeTilde, i, j);
    } else {
        c.add(gates::braid_dag(j, i));
    }
    return c;
}

Circuit string_circuit(const MQS &s) {
    require_majorana_only(s);
    const auto &eta = s.majoranas();
    Circuit c = Circuit::fermions(s.max_site_plus_one());
    for (size_t k = 0; k + 1 < eta.size(); k += 2) {
        // exp(-pi/2 eta_x eta_y) = -eta_x eta_y
        Circuit r = majorana_rotation(eta[k], eta[k + 1]);
        c.append(r).append(r);
    }
    return c;
}

Circuit controlled_string(uint32_t ancilla, const MQS &p) {
    require_majorana_only(p);
    if (!p.is_hermitian()) {
        throw std::invalid_argument("controlled string must be Hermitian");
    }
    const auto &eta = p.majoranas();
    const size_t m = eta.size() / 2;
    // P = c (-i)^m prod_k (i eta_x eta_y)
    Phase rest = p.phase() * Phase::from_power(-static_cast<int>(m));
    Circuit c(Registers{ancilla + 1, p.max_site_plus_one(), {}});
    if (rest == Phase::minus_one()) {
        c.add(gates::z(ancilla));
    } else if (rest != Phase::one()) {
        throw std::logic_error("Hermitian string gave a non-real pair phase");
    }
    for (size_t k = 0; k < m; k++) {
        uint32_t x = eta[2 * k], y = eta[2 * k + 1];
        uint32_t site = x / 2;
        if (y == (x ^ 1u)) {
            // i gamma gamma~ = Z^f
            c.add(gates::czqf(ancilla, site));
            continue;
        }
        // R = exp(-pi/4 eta_x' eta_y) sends eta_x' to -eta_y, so
        // i eta_x eta_y = R^dag (-i eta_x eta_x') R, which is -Z^f for x = gamma and +Z^f for x = gamma~.
        Circuit r = majorana_rotation(x ^ 1u, y);
        c.append(r);
        c.add(gates::czqf(ancilla, site));
        if (!(x & 1)) c.add(gates::z(ancilla));
        c.append(r.inverse());
    }
    return c;
}

std::string syndrome_record(uint32_t round, size_t k) {
    return "s" + std::to_string(round) + "_" + std::to_string(k);
}

Circuit syndrome_circuit(const StabilizerCode &code, uint32_t round, uint32_t qubit_base) {
    const uint32_t ng = static_cast<uint32_t>(code.generators.size());
    Circuit c(Registers{qubit_base + ng, code.n_sites, {}});
    for (uint32_t k = 0; k < ng; k++) {
        uint32_t a = qubit_base + k;
        c.add(gates::h(a));
        c.append(controlled_string(a, code.generators[k]));
        c.add(gates::h(a));
        c.measure(qubit(a), syndrome_record(round, k));
    }
    for (uint32_t k = 0; k < ng; k++) c.reset(qubit(qubit_base + k));
    return c;
}

}  // namespace fqc
