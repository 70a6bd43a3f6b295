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

#include "fqc/circuit/braid_variants.h"

#include <algorithm>
#include <stdexcept>

namespace fqc {

Circuit braid_variant(BraidVariant kind, uint32_t i, uint32_t j) {
    if (i == j) {
        throw std::invalid_argument("braid variant needs i != j");
    }
    Circuit c = Circuit::fermions(std::max(i, j) + 1);
    switch (kind) {
        case BraidVariant::TildeTilde:
            c.add(gates::sf(j)).add(gates::braid(i, j)).add(gates::sf_dag(j));
            break;
        case BraidVariant::PlainPlain:
            c.add(gates::sf_dag(i)).add(gates::braid(i, j)).add(gates::sf(i));
            break;
        case BraidVariant::Inverse:
            c.add(gates::zf(j)).add(gates::braid(i, j)).add(gates::zf(j));
            break;
    }
    return c;
}

}  // namespace fqc
