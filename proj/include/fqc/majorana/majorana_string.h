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

#ifndef FQC_MAJORANA_MAJORANA_STRING_H
#define FQC_MAJORANA_MAJORANA_STRING_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqc/majorana/phase.h"

namespace fqc {

enum class MajoranaKind : uint8_t { Gamma = 0, GammaTilde = 1 };

/// Majorana operator gamma_site or gamma~_site. The flat index interleaves the two kinds per site.
struct MajoranaIndex {
    uint32_t site = 0;
    MajoranaKind kind = MajoranaKind::Gamma;

    constexpr uint32_t flat() const { return 2 * site + static_cast<uint32_t>(kind); }
    static constexpr MajoranaIndex from_flat(uint32_t eta) {
        return {eta / 2, (eta & 1) ? MajoranaKind::GammaTilde : MajoranaKind::Gamma};
    }
    constexpr bool operator==(const MajoranaIndex &) const = default;
};

enum class PauliLetter : uint8_t { X = 1, Z = 2, Y = 3 };

char pauli_char(PauliLetter p);
PauliLetter pauli_from_char(char c);
/// Product of two single-qubit letters: a*b = i^power * letter (letter absent when a == b).
struct LetterProduct {
    int power;
    bool identity;
    PauliLetter letter;
};
LetterProduct multiply_letters(PauliLetter a, PauliLetter b);

/// i^k times an ascending product of Majorana operators times a product of Pauli letters on qubits.
///
/// Pauli letters act on qubit registers, which commute with all fermion operators.
class MajoranaQubitString {
   public:
    MajoranaQubitString() = default;

    static MajoranaQubitString gamma(uint32_t site, Phase phase = {});
    static MajoranaQubitString gamma_tilde(uint32_t site, Phase phase = {});
    static MajoranaQubitString majorana(MajoranaIndex m, Phase phase = {});
    static MajoranaQubitString pauli(uint32_t qubit, PauliLetter letter, Phase phase = {});
    /// Canonical form of phase * eta[0] * eta[1] * ... (any order, repeats allowed).
    static MajoranaQubitString from_factors(std::span<const uint32_t> eta, Phase phase = {});
    /// i * gamma~_site * gamma_site squared is one; (1 - 2 n) equals -i gamma~ gamma.
    static MajoranaQubitString parity(uint32_t site);
    /// Text form, e.g. "-i * g0 gt2 | X:q1".
    static MajoranaQubitString parse(std::string_view text);

    Phase phase() const { return phase_; }
    const std::vector<uint32_t> &majoranas() const { return majoranas_; }
    const std::vector<std::pair<uint32_t, PauliLetter>> &paulis() const { return paulis_; }
    size_t majorana_weight() const { return majoranas_.size(); }
    bool is_fermionic() const { return majoranas_.size() & 1; }
    bool is_identity() const { return majoranas_.empty() && paulis_.empty(); }
    bool has_majorana(uint32_t eta) const;
    /// Letter on the given qubit, or nullopt-like 0 when absent.
    uint8_t letter_on(uint32_t qubit) const;
    uint32_t max_site_plus_one() const;
    uint32_t max_qubit_plus_one() const;

    MajoranaQubitString with_phase(Phase p) const;
    MajoranaQubitString unphased() const { return with_phase(Phase::one()); }
    MajoranaQubitString adjoint() const;
    bool is_hermitian() const { return adjoint() == *this; }
    /// S*S = sign * identity for every string; returns true when it is +1.
    bool squares_to_one() const;

    std::string str() const;

    bool operator==(const MajoranaQubitString &) const = default;
    /// Order on the operator part only (phase ignored) followed by phase.
    bool operator<(const MajoranaQubitString &o) const;
    bool same_operator(const MajoranaQubitString &o) const {
        return majoranas_ == o.majoranas_ && paulis_ == o.paulis_;
    }

    friend MajoranaQubitString operator*(const MajoranaQubitString &a, const MajoranaQubitString &b);
    friend MajoranaQubitString operator*(Phase p, const MajoranaQubitString &a) { return a.with_phase(p * a.phase_); }

   private:
    Phase phase_;
    std::vector<uint32_t> majoranas_;
    std::vector<std::pair<uint32_t, PauliLetter>> paulis_;
};

MajoranaQubitString canonicalize(std::span<const uint32_t> factors, Phase phase);
MajoranaQubitString multiply(const MajoranaQubitString &a, const MajoranaQubitString &b);

enum class Commutation { Commutes, Anticommutes };
Commutation commutation_class(const MajoranaQubitString &a, const MajoranaQubitString &b);

std::ostream &operator<<(std::ostream &out, const MajoranaQubitString &s);

}  // namespace fqc

#endif
