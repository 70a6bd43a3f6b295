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

#ifndef FQC_CODES_STABILIZER_CODE_H
#define FQC_CODES_STABILIZER_CODE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqc/majorana/majorana_string.h"
#include "fqc/majorana/operator_sum.h"
#include "json.hpp"

namespace fqc {

using BinaryMatrix = std::vector<std::vector<uint8_t>>;

struct Plaquette {
    std::vector<uint32_t> sites;
    int color = 0;
};

struct CodeLayout {
    std::string kind;  // "chain" or "triangular"
    std::vector<std::pair<int, int>> coords;
    std::vector<Plaquette> plaquettes;
};

/// One logical fermion stored in n_sites physical modes.
struct StabilizerCode {
    std::string name;
    uint32_t n_sites = 0;
    uint32_t distance = 0;
    std::vector<MajoranaQubitString> generators;
    MajoranaQubitString logical_gamma;
    MajoranaQubitString logical_gamma_tilde;
    CodeLayout layout;

    /// Every broken invariant as a readable line; empty when the code is consistent.
    std::vector<std::string> violations() const;
    /// (gamma^L + i gamma~^L)/2
    OperatorSum logical_creation() const;
    OperatorSum logical_annihilation() const;
    /// (1 + i gamma~^L gamma^L)/2
    OperatorSum logical_number() const;
    /// Copy of the code acting on sites shifted by `offset`.
    StabilizerCode shifted(uint32_t offset) const;
    nlohmann::json to_json() const;
};

/// Hermitian generator on a Majorana support: i^(w/2) times the ascending product.
MajoranaQubitString hermitian_product(const std::vector<uint32_t> &eta);

MajoranaQubitString shift_sites(const MajoranaQubitString &s, uint32_t offset);

StabilizerCode build_repetition(uint32_t n);

/// gamma-type generators from the Z checks, gamma~-type from the X checks.
StabilizerCode from_css(const BinaryMatrix &x_checks, const BinaryMatrix &z_checks, std::string name = "css");

/// [7,4] Hamming parity checks (columns are the binary numbers 1..7).
BinaryMatrix hamming_checks();

/// Syndrome bit k is 1 when s anticommutes with generator k.
std::vector<int> syndrome_of(const std::vector<MajoranaQubitString> &generators, const MajoranaQubitString &s);

/// If s equals c times a product of generators, returns c and the generator indices used.
struct GroupMembership {
    bool in_group = false;
    Phase phase;
    std::vector<size_t> combination;
};
GroupMembership group_membership(const std::vector<MajoranaQubitString> &generators, const MajoranaQubitString &s);

/// Logicals c prod gamma_i and +-c prod gamma~_i with c = i^(n(n-1)/2); the sign on
/// gamma~^L is chosen so that the vacuum parity equals the logical parity modulo
/// stabilizers, i.e. states prepared from the vacuum are |0>_L.
void set_total_parity_logicals(StabilizerCode &code);

/// Rank over GF(2) of the Majorana supports.
size_t support_rank(const std::vector<MajoranaQubitString> &strings);

}  // namespace fqc

#endif
