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

#ifndef FQC_CIRCUIT_BRAID_VARIANTS_H
#define FQC_CIRCUIT_BRAID_VARIANTS_H

#include "fqc/circuit/circuit.h"

namespace fqc {

enum class BraidVariant {
    TildeTilde,  // exp(-pi/4 gt_i gt_j)
    PlainPlain,  // exp(-pi/4 g_i g_j)
    Inverse,     // BRAID_ij^dagger
};

/// Compilation of the variant into Sf/Zf conjugations of BRAID_ij.
Circuit braid_variant(BraidVariant kind, uint32_t i, uint32_t j);

}  // namespace fqc

#endif
