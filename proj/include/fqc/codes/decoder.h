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

#ifndef FQC_CODES_DECODER_H
#define FQC_CODES_DECODER_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqc/circuit/circuit.h"
#include "fqc/codes/stabilizer_code.h"

namespace fqc {

using Syndrome = std::vector<int>;

/// Syndrome -> correction string (identity string for the trivial syndrome).
struct SyndromeTable {
    std::map<Syndrome, MajoranaQubitString> entries;
    /// Errors whose syndrome was already claimed by an earlier (lower weight) error.
    std::vector<std::string> collisions;

    std::optional<MajoranaQubitString> lookup(const Syndrome &s) const;
    /// One row per entry: syndrome bits then the correction string.
    std::string to_csv() const;
};

/// Identity, every single Majorana, then every Zf_i. Single-site errors at d = 3.
SyndromeTable build_lookup_table(const StabilizerCode &code);

/// Sites that receive Zf for a repetition-code syndrome (bit k is generator k).
/// The two consistent error chains are compared and the lighter one wins; on a tie
/// the chain whose first site is lower wins.
std::vector<uint32_t> decode_repetition(const Syndrome &s);

struct Correction {
    bool correctable = false;
    MajoranaQubitString op;  // identity when nothing to do
    std::string note;
};

/// Repetition codes use the chain rule, d = 3 codes the lookup table. Other codes
/// only report whether anything was detected.
Correction decode(const StabilizerCode &code, const Syndrome &s);

/// Applies a correction string. Odd parts go through an ancilla fermion site
/// prepared in |0>: (BRAID_ai)^2 = -gt_a g_i, then the ancilla is measured and reset.
Circuit correction_circuit(const MajoranaQubitString &op, uint32_t ancilla_site);

/// Classically conditioned corrections for every syndrome the decoder handles,
/// reading the records of `round`. The ancilla site is reset at the end.
Circuit decoding_circuit(const StabilizerCode &code, uint32_t round, uint32_t ancilla_site);

}  // namespace fqc

#endif
