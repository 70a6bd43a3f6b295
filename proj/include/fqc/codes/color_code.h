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

#ifndef FQC_CODES_COLOR_CODE_H
#define FQC_CODES_COLOR_CODE_H

#include "fqc/codes/stabilizer_code.h"

namespace fqc {

/// Triangular 6.6.6 colour code of odd distance d >= 3.
///
/// Lattice points (r, c) with 0 <= c <= r <= 3(d-1)/2. Points with
/// (r + c + 1) % 3 == 0 are plaquette centres, every other point is a site.
/// Each plaquette yields a gamma-type generator i^(w/2) prod gamma and a gamma~-type
/// partner whose sign makes the pair multiply to the plaquette parity.
StabilizerCode build_color_code(uint32_t d);

}  // namespace fqc

#endif
