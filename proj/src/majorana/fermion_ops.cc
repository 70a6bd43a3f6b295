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

#include "fqc/majorana/fermion_ops.h"

namespace fqc {

using MQS = MajoranaQubitString;

OperatorSum creation(uint32_t site) {
    OperatorSum out(0.5, MQS::gamma(site));
    out.add(cplx(0, 0.5), MQS::gamma_tilde(site));
    return out;
}

OperatorSum annihilation(uint32_t site) {
    OperatorSum out(0.5, MQS::gamma(site));
    out.add(cplx(0, -0.5), MQS::gamma_tilde(site));
    return out;
}

OperatorSum number(uint32_t site) {
    OperatorSum out = OperatorSum::identity(0.5);
    out.add(-0.5, fermion_parity(site));
    return out;
}

MajoranaQubitString fermion_parity(uint32_t site) { return MQS::parity(site); }

OperatorSum qubit_number(uint32_t qubit) {
    OperatorSum out = OperatorSum::identity(0.5);
    out.add(-0.5, MQS::pauli(qubit, PauliLetter::Z));
    return out;
}

}  // namespace fqc
