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

#ifndef FQC_CODES_ENCODING_H
#define FQC_CODES_ENCODING_H

#include <vector>

#include "fqc/circuit/circuit.h"
#include "fqc/codes/stabilizer_code.h"
#include "fqc/sim/state_vector.h"

namespace fqc {

/// Unitary chain taking the vacuum to |0>_L of the repetition code:
/// for k = 0..n-2, BRAID(k, k+1) then Sf^dag(k+1).
Circuit repetition_encoder(uint32_t n);

/// Even strings D_k that anticommute with generator k only and commute with both logicals.
std::vector<MajoranaQubitString> destabilizers(const StabilizerCode &code);

/// Measure every generator from the vacuum. Unless `tracked`, each -1 outcome is
/// fixed by its destabilizer so the final state reads +1 everywhere. With `tracked`
/// the outcomes are left in the records as a sign frame.
Circuit measurement_preparation(const StabilizerCode &code, bool tracked = true);

/// Whichever preparation the code supports: the unitary chain for repetition codes,
/// measurement otherwise.
Circuit encoding_circuit(const StabilizerCode &code);

/// Exact |0>_L and |1>_L = c_L^dag |0>_L on `layout` (the code's sites must fit).
/// |0>_L is the normalised projection of the vacuum onto the +1 space with n_L = 0.
struct LogicalBasis {
    StateVector zero;
    StateVector one;
};
LogicalBasis logical_basis(const StabilizerCode &code, const Layout &layout);

/// Codespace projection (1 + g_k)/2 for every generator, applied to s.
StateVector project_codespace(const StabilizerCode &code, const StateVector &s);

}  // namespace fqc

#endif
