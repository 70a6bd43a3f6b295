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

#include "fqc/majorana/majorana_string.h"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fqc {

char pauli_char(PauliLetter p) {
    switch (p) {
        case PauliLetter::X:
            return 'X';
        case PauliLetter::Y:
            return 'Y';
        default:
            return 'Z';
    }
}

PauliLetter pauli_from_char(char c) {
    switch (c) {
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
    }
    throw std::invalid_argument(std::string("bad pauli letter ") + c);
}

LetterProduct multiply_letters(PauliLetter a, PauliLetter b) {
    if (a == b) {
        return {0, true, a};
    }
    auto third = static_cast<PauliLetter>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
    // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
    bool cyclic = (a == PauliLetter::X && b == PauliLetter::Y) || (a == PauliLetter::Y && b == PauliLetter::Z) ||
                  (a == PauliLetter::Z && b == PauliLetter::X);
    return {cyclic ? 1 : 3, false, third};
}

MajoranaQubitString canonicalize(std::span<const uint32_t> factors, Phase phase) {
    std::vector<uint32_t> v(factors.begin(), factors.end());
    size_t inversions = 0;
    // Insertion sort; each move past a strictly larger neighbour is one anticommuting swap.
    for (size_t i = 1; i < v.size(); i++) {
        uint32_t x = v[i];
        size_t j = i;
        while (j > 0 && v[j - 1] > x) {
            v[j] = v[j - 1];
            j--;
            inversions++;
        }
        v[j] = x;
    }
    std::vector<uint32_t> out;
    out.reserve(v.size());
    for (uint32_t x : v) {
        if (!out.empty() && out.back() == x) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    return MajoranaQubitString::from_factors(out, phase * Phase::sign(inversions & 1));
}

MajoranaQubitString MajoranaQubitString::from_factors(std::span<const uint32_t> eta, Phase phase) {
    bool sorted = true;
    for (size_t i = 1; i < eta.size(); i++) {
        if (eta[i - 1] >= eta[i]) {
            sorted = false;
            break;
        }
    }
    if (!sorted) {
        return canonicalize(eta, phase);
    }
    MajoranaQubitString s;
    s.phase_ = phase;
    s.majoranas_.assign(eta.begin(), eta.end());
    return s;
}

MajoranaQubitString MajoranaQubitString::gamma(uint32_t site, Phase phase) {
    return majorana({site, MajoranaKind::Gamma}, phase);
}

MajoranaQubitString MajoranaQubitString::gamma_tilde(uint32_t site, Phase phase) {
    return majorana({site, MajoranaKind::GammaTilde}, phase);
}

MajoranaQubitString MajoranaQubitString::majorana(MajoranaIndex m, Phase phase) {
    MajoranaQubitString s;
    s.phase_ = phase;
    s.majoranas_.push_back(m.flat());
    return s;
}

MajoranaQubitString MajoranaQubitString::pauli(uint32_t qubit, PauliLetter letter, Phase phase) {
    MajoranaQubitString s;
    s.phase_ = phase;
    s.paulis_.emplace_back(qubit, letter);
    return s;
}

MajoranaQubitString MajoranaQubitString::parity(uint32_t site) {
    // -i * gt * g = i * g * gt
    uint32_t f[] = {2 * site, 2 * site + 1};
    return from_factors(f, Phase::i());
}

bool MajoranaQubitString::has_majorana(uint32_t eta) const {
    return std::binary_search(majoranas_.begin(), majoranas_.end(), eta);
}

uint8_t MajoranaQubitString::letter_on(uint32_t qubit) const {
    for (const auto &[q, l] : paulis_) {
        if (q == qubit) {
            return static_cast<uint8_t>(l);
        }
    }
    return 0;
}

uint32_t MajoranaQubitString::max_site_plus_one() const {
    return majoranas_.empty() ? 0 : majoranas_.back() / 2 + 1;
}

uint32_t MajoranaQubitString::max_qubit_plus_one() const {
    return paulis_.empty() ? 0 : paulis_.back().first + 1;
}

MajoranaQubitString MajoranaQubitString::with_phase(Phase p) const {
    MajoranaQubitString s = *this;
    s.phase_ = p;
    return s;
}

MajoranaQubitString MajoranaQubitString::adjoint() const {
    size_t m = majoranas_.size();
    bool flip = (m >= 2) && (((m * (m - 1)) / 2) & 1);
    return with_phase(phase_.conj() * Phase::sign(flip));
}

bool MajoranaQubitString::squares_to_one() const {
    MajoranaQubitString sq = *this * *this;
    return sq.phase() == Phase::one();
}

bool MajoranaQubitString::operator<(const MajoranaQubitString &o) const {
    if (majoranas_ != o.majoranas_) {
        return majoranas_ < o.majoranas_;
    }
    if (paulis_ != o.paulis_) {
        return paulis_ < o.paulis_;
    }
    return phase_.power() < o.phase_.power();
}

std::string MajoranaQubitString::str() const {
    std::ostringstream out;
    out << phase_.str() << " *";
    if (majoranas_.empty()) {
        out << " 1";
    }
    for (uint32_t eta : majoranas_) {
        out << ((eta & 1) ? " gt" : " g") << eta / 2;
    }
    if (!paulis_.empty()) {
        out << " |";
        for (const auto &[q, l] : paulis_) {
            out << ' ' << pauli_char(l) << ":q" << q;
        }
    }
    return out.str();
}

MajoranaQubitString MajoranaQubitString::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> toks;
    for (std::string t; in >> t;) {
        toks.push_back(t);
    }
    if (toks.empty()) {
        throw std::invalid_argument("empty operator string");
    }
    // The "phase *" prefix is optional.
    Phase phase;
    size_t start = 0;
    if (toks.size() >= 2 && toks[1] == "*") {
        phase = Phase::parse(toks[0]);
        start = 2;
    }
    std::vector<uint32_t> eta;
    MajoranaQubitString paulis;
    bool in_paulis = false;
    auto number = [&](const std::string &s, size_t from) {
        if (from >= s.size()) {
            throw std::invalid_argument("missing index in token '" + s + "'");
        }
        size_t used = 0;
        unsigned long v = std::stoul(s.substr(from), &used);
        if (used != s.size() - from) {
            throw std::invalid_argument("bad token '" + s + "'");
        }
        return static_cast<uint32_t>(v);
    };
    for (size_t k = start; k < toks.size(); k++) {
        const std::string &tok = toks[k];
        if (tok == "|") {
            in_paulis = true;
            continue;
        }
        if (in_paulis) {
            if (tok.size() < 4 || tok[1] != ':' || tok[2] != 'q') {
                throw std::invalid_argument("bad pauli token '" + tok + "'");
            }
            paulis = paulis * pauli(number(tok, 3), pauli_from_char(tok[0]));
        } else if (tok == "1") {
            continue;
        } else if (tok.rfind("gt", 0) == 0) {
            eta.push_back(2 * number(tok, 2) + 1);
        } else if (tok.rfind("g", 0) == 0) {
            eta.push_back(2 * number(tok, 1));
        } else {
            throw std::invalid_argument("bad majorana token '" + tok + "'");
        }
    }
    return from_factors(eta, phase) * paulis;
}

MajoranaQubitString operator*(const MajoranaQubitString &a, const MajoranaQubitString &b) {
    std::vector<uint32_t> eta = a.majoranas_;
    eta.insert(eta.end(), b.majoranas_.begin(), b.majoranas_.end());
    MajoranaQubitString out;
    if (a.majoranas_.empty() || b.majoranas_.empty() || a.majoranas_.back() < b.majoranas_.front()) {
        out.majoranas_ = std::move(eta);
        out.phase_ = a.phase_ * b.phase_;
    } else {
        out = canonicalize(eta, a.phase_ * b.phase_);
    }
    // Merge Pauli parts.
    auto ia = a.paulis_.begin();
    auto ib = b.paulis_.begin();
    while (ia != a.paulis_.end() || ib != b.paulis_.end()) {
        if (ib == b.paulis_.end() || (ia != a.paulis_.end() && ia->first < ib->first)) {
            out.paulis_.push_back(*ia++);
        } else if (ia == a.paulis_.end() || ib->first < ia->first) {
            out.paulis_.push_back(*ib++);
        } else {
            LetterProduct p = multiply_letters(ia->second, ib->second);
            out.phase_ *= Phase::from_power(p.power);
            if (!p.identity) {
                out.paulis_.emplace_back(ia->first, p.letter);
            }
            ++ia;
            ++ib;
        }
    }
    return out;
}

MajoranaQubitString multiply(const MajoranaQubitString &a, const MajoranaQubitString &b) {
    return a * b;
}

Commutation commutation_class(const MajoranaQubitString &a, const MajoranaQubitString &b) {
    size_t na = a.majoranas().size();
    size_t nb = b.majoranas().size();
    size_t overlap = 0;
    auto ia = a.majoranas().begin();
    auto ib = b.majoranas().begin();
    while (ia != a.majoranas().end() && ib != b.majoranas().end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            overlap++;
            ++ia;
            ++ib;
        }
    }
    size_t anti = na * nb + overlap;
    for (const auto &[q, l] : a.paulis()) {
        uint8_t other = b.letter_on(q);
        if (other != 0 && other != static_cast<uint8_t>(l)) {
            anti++;
        }
    }
    return (anti & 1) ? Commutation::Anticommutes : Commutation::Commutes;
}

std::ostream &operator<<(std::ostream &out, const MajoranaQubitString &s) {
    return out << s.str();
}

}  // namespace fqc
