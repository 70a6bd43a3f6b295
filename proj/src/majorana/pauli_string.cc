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

#include "fqc/majorana/pauli_string.h"

namespace fqc {

PauliString PauliString::single(uint32_t wire, PauliLetter letter, Phase phase) {
    PauliString p;
    p.phase_ = phase;
    p.letters_.emplace_back(wire, letter);
    return p;
}

PauliString PauliString::with_phase(Phase p) const {
    PauliString out = *this;
    out.phase_ = p;
    return out;
}

std::string PauliString::dense_str(uint32_t n_wires) const {
    std::string out;
    switch (phase_.power()) {
        case 0:
            out = "+";
            break;
        case 1:
            out = "+i";
            break;
        case 2:
            out = "-";
            break;
        default:
            out = "-i";
    }
    std::string body(n_wires, 'I');
    for (const auto &[w, l] : letters_) {
        if (w < n_wires) {
            body[w] = pauli_char(l);
        }
    }
    return out + body;
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    PauliString out;
    out.phase_ = a.phase_ * b.phase_;
    auto ia = a.letters_.begin();
    auto ib = b.letters_.begin();
    while (ia != a.letters_.end() || ib != b.letters_.end()) {
        if (ib == b.letters_.end() || (ia != a.letters_.end() && ia->first < ib->first)) {
            out.letters_.push_back(*ia++);
        } else if (ia == a.letters_.end() || ib->first < ia->first) {
            out.letters_.push_back(*ib++);
        } else {
            LetterProduct p = multiply_letters(ia->second, ib->second);
            out.phase_ *= Phase::from_power(p.power);
            if (!p.identity) {
                out.letters_.emplace_back(ia->first, p.letter);
            }
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace fqc
