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

#ifndef FQC_SIM_APPLY_STRING_H
#define FQC_SIM_APPLY_STRING_H

#include "fqc/majorana/operator_sum.h"
#include "fqc/sim/state_vector.h"

namespace fqc {

/// S|psi> for a Majorana-qubit string, with gamma = p^+ + p and gt = -i (p^+ - p).
StateVector apply_string(const StateVector &s, const MajoranaQubitString &op);
StateVector apply_operator(const StateVector &s, const OperatorSum &op);
/// <psi|O|psi>
cplx expectation(const StateVector &s, const OperatorSum &op);
/// <a|O|b>
cplx matrix_element(const StateVector &a, const OperatorSum &op, const StateVector &b);

}  // namespace fqc

#endif
