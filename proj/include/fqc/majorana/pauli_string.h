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

#ifndef FQC_MAJORANA_PAULI_STRING_H
#define FQC_MAJORANA_PAULI_STRING_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqc/majorana/majorana_string.h"

namespace fqc {

/// Phase times a tensor product of Pauli letters on numbered wires.
class PauliString {
   public:
    PauliString() = default;
    static PauliString single(uint32_t wire, PauliLetter letter, Phase phase = {});

    Phase phase() const { return phase_; }
    const std::vector<std::pair<uint32_t, PauliLetter>> &letters() const { return letters_; }
    bool is_hermitian() const { return phase_.is_real(); }
    PauliString with_phase(Phase p) const;
    /// Dense-style label such as "-ZIY" over the given number of wires.
    std::string dense_str(uint32_t n_wires) const;

    bool operator==(const PauliString &) const = default;
    friend PauliString operator*(const PauliString &a, const PauliString &b);

   private:
    Phase phase_;
    std::vector<std::pair<uint32_t, PauliLetter>> letters_;
};

}  // namespace fqc

#endif
