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

#ifndef FQC_MAJORANA_FERMION_OPS_H
#define FQC_MAJORANA_FERMION_OPS_H

#include "fqc/majorana/operator_sum.h"

namespace fqc {

/// p_i^dagger = (gamma_i + i gamma~_i) / 2
OperatorSum creation(uint32_t site);
/// p_i = (gamma_i - i gamma~_i) / 2
OperatorSum annihilation(uint32_t site);
/// n_i = (1 + i gamma~_i gamma_i) / 2
OperatorSum number(uint32_t site);
/// Z^f_i = 1 - 2 n_i = -i gamma~_i gamma_i
MajoranaQubitString fermion_parity(uint32_t site);
/// Qubit projector onto |1>: (1 - Z) / 2.
OperatorSum qubit_number(uint32_t qubit);

}  // namespace fqc

#endif
