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

#include "fqc/codes/decoder.h"

#include <sstream>
#include <stdexcept>

#include "fqc/codes/syndrome.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;

std::string bits_str(const Syndrome &s) {
    std::string out;
    for (int b : s) out += b ? '1' : '0';
    return out;
}

}  // namespace

std::optional<MQS> SyndromeTable::lookup(const Syndrome &s) const {
    auto it = entries.find(s);
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

std::string SyndromeTable::to_csv() const {
    std::ostringstream out;
    out << "syndrome,correction\n";
    for (const auto &[s, op] : entries) out << bits_str(s) << "," << (op.is_identity() ? "I" : op.str()) << "\n";
    return out.str();
}

SyndromeTable build_lookup_table(const StabilizerCode &code) {
    SyndromeTable t;
    std::vector<MQS> errors{MQS()};
    for (uint32_t i = 0; i < code.n_sites; i++) {
        errors.push_back(MQS::gamma(i));
        errors.push_back(MQS::gamma_tilde(i));
    }
    for (uint32_t i = 0; i < code.n_sites; i++) errors.push_back(MQS::parity(i));
    for (const MQS &e : errors) {
        Syndrome s = syndrome_of(code.generators, e);
        if (!t.entries.emplace(s, e).second) t.collisions.push_back(e.str());
    }
    return t;
}

std::vector<uint32_t> decode_repetition(const Syndrome &s) {
    // s_k = x_k xor x_{k+1}; fix x_0 and propagate, then take the complement if lighter.
    const size_t n = s.size() + 1;
    std::vector<int> x(n, 0);
    for (size_t k = 0; k + 1 < n; k++) x[k + 1] = x[k] ^ s[k];
    size_t w = 0;
    for (int b : x) w += b;
    bool flip = false;
    if (2 * w > n) {
        flip = true;
    } else if (2 * w == n) {
        // Tie: keep the chain that touches the lower site first.
        flip = x[0] == 0;
    }
    std::vector<uint32_t> out;
    for (size_t i = 0; i < n; i++)
        if (x[i] ^ static_cast<int>(flip)) out.push_back(static_cast<uint32_t>(i));
    return out;
}

Correction decode(const StabilizerCode &code, const Syndrome &s) {
    if (s.size() != code.generators.size()) {
        throw std::invalid_argument("syndrome length does not match the generator count");
    }
    bool trivial = true;
    for (int b : s) trivial = trivial && b == 0;
    if (trivial) return {true, MQS(), ""};
    if (code.name == "repetition") {
        MQS op;
        for (uint32_t site : decode_repetition(s)) op = op * MQS::parity(site);
        return {true, op, ""};
    }
    if (code.distance == 3) {
        auto hit = build_lookup_table(code).lookup(s);
        if (hit) return {true, *hit, ""};
        return {false, MQS(), "syndrome " + bits_str(s) + " is outside the table"};
    }
    return {false, MQS(), "detected; no decoder for distance " + std::to_string(code.distance)};
}

Circuit correction_circuit(const MQS &op, uint32_t ancilla_site) {
    const auto &eta = op.majoranas();
    Circuit c = Circuit::fermions(std::max(op.max_site_plus_one(), ancilla_site + 1));
    size_t start = 0;
    if (op.is_fermionic()) {
        Circuit r = majorana_rotation(2 * ancilla_site + 1, eta[0]);
        c.append(r).append(r);
        c.reset(fermion(ancilla_site));
        start = 1;
    }
    std::vector<uint32_t> rest(eta.begin() + static_cast<std::ptrdiff_t>(start), eta.end());
    if (!rest.empty()) c.append(string_circuit(MQS::from_factors(rest)));
    return c;
}

Circuit decoding_circuit(const StabilizerCode &code, uint32_t round, uint32_t ancilla_site) {
    const size_t ng = code.generators.size();
    Circuit c(Registers{0, std::max(code.n_sites, ancilla_site + 1), {}});
    if (ng > 16) {
        throw std::invalid_argument("conditioned decoding circuits are limited to 16 generators");
    }
    for (uint64_t bits = 1; bits < (uint64_t{1} << ng); bits++) {
        Syndrome s(ng);
        std::vector<std::pair<std::string, int>> when;
        for (size_t k = 0; k < ng; k++) {
            s[k] = (bits >> k) & 1;
            when.emplace_back(syndrome_record(round, k), s[k]);
        }
        Correction corr = decode(code, s);
        if (!corr.correctable || corr.op.is_identity()) continue;
        const auto &eta = corr.op.majoranas();
        if (corr.op.is_fermionic()) {
            Circuit r = majorana_rotation(2 * ancilla_site + 1, eta[0]);
            for (int twice = 0; twice < 2; twice++)
                for (const Gate &g : r.gates()) c.conditioned(when, g);
        }
        std::vector<uint32_t> rest(eta.begin() + (corr.op.is_fermionic() ? 1 : 0), eta.end());
        if (!rest.empty()) {
            for (const Gate &g : string_circuit(MQS::from_factors(rest)).gates()) c.conditioned(when, g);
        }
    }
    c.reset(fermion(ancilla_site));
    return c;
}

}  // namespace fqc
