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

#include "fqc/sim/apply_string.h"

#include <stdexcept>

namespace fqc {

namespace {

struct Factor {
    bool is_pauli;
    uint32_t index;
    uint8_t kind;  // majorana kind or pauli letter
};

}  // namespace

StateVector apply_string(const StateVector &s, const MajoranaQubitString &op) {
    const Layout &l = s.layout();
    if (op.max_site_plus_one() > l.fermions() || op.max_qubit_plus_one() > l.qubits()) {
        throw std::invalid_argument("operator " + op.str() + " acts outside the layout");
    }
    std::vector<Factor> factors;
    for (uint32_t eta : op.majoranas()) {
        factors.push_back({false, eta / 2, static_cast<uint8_t>(eta & 1)});
    }
    for (const auto &[q, letter] : op.paulis()) {
        factors.push_back({true, q, static_cast<uint8_t>(letter)});
    }
    const cplx phase = op.phase().value();
    StateVector out(l);
    for (const auto &[start, amp] : s.amplitudes()) {
        BasisIndex i = start;
        cplx c = amp * phase;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            if (it->is_pauli) {
                int b = l.qubit(i, it->index);
                switch (static_cast<PauliLetter>(it->kind)) {
                    case PauliLetter::X:
                        i = l.flip_qubit(i, it->index);
                        break;
                    case PauliLetter::Y:
                        c *= b ? cplx(0, -1) : cplx(0, 1);
                        i = l.flip_qubit(i, it->index);
                        break;
                    case PauliLetter::Z:
                        if (b) c = -c;
                        break;
                }
                continue;
            }
            uint32_t f = it->index;
            int b = l.fermion(i, f);
            double sign = (l.occupied_before(i, f) & 1) ? -1.0 : 1.0;
            if (it->kind == 0) {
                c *= sign;  // p^+ + p
            } else {
                // -i (p^+ - p)
                c *= sign * (b ? cplx(0, 1) : cplx(0, -1));
            }
            i = l.flip_fermion(i, f);
        }
        out.add(i, c);
    }
    out.prune(0);
    return out;
}

StateVector apply_operator(const StateVector &s, const OperatorSum &op) {
    StateVector out(s.layout());
    for (const auto &[str, c] : op.terms()) {
        StateVector part = apply_string(s, str);
        part.scale(c);
        out += part;
    }
    out.prune(0);
    return out;
}

cplx expectation(const StateVector &s, const OperatorSum &op) { return s.inner(apply_operator(s, op)); }

cplx matrix_element(const StateVector &a, const OperatorSum &op, const StateVector &b) {
    return a.inner(apply_operator(b, op));
}

}  // namespace fqc
