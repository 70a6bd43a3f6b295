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

#ifndef FQC_CODES_THEOREM_DEMO_H
#define FQC_CODES_THEOREM_DEMO_H

#include <cstddef>

#include "json.hpp"

namespace fqc {

/// Matrix-level check that number-eigenstate codes cannot carry fermionic logicals
/// while parity-eigenstate codes can.
///
/// Number code: two blocks of two modes, codewords |10> and |01> per block.
/// Every ordered pair (O1, O2) of anticommuting odd strings on a block gives a
/// candidate c^dag = P (O1 + i O2) P / 2. A cross-block pair of candidates qualifies
/// when {c_a^dag, c_b^dag} = 0 and {c_x, c_x^dag} = P for both blocks.
///
/// Parity code: two N = 2 repetition blocks with their actual logical c^dag.
struct TheoremDemo {
    size_t candidates_per_block = 0;
    size_t pairs_checked = 0;
    size_t pairs_qualifying = 0;
    double largest_projected_norm = 0;  // over number-code candidates
    double repetition_anticommutator = 0;  // || P {c_a^dag, c_b^dag} P ||
    double repetition_normalisation = 0;   // max over blocks of || P {c, c^dag} P - P ||

    bool passed(double tol = 1e-10) const {
        return pairs_checked > 0 && pairs_qualifying == 0 && repetition_anticommutator < tol &&
               repetition_normalisation < tol;
    }
    nlohmann::json to_json() const;
};

TheoremDemo theorem_demo();

}  // namespace fqc

#endif
