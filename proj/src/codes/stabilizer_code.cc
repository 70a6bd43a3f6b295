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

#include "fqc/codes/stabilizer_code.h"

#include <algorithm>
#include <stdexcept>

#include "fqc/majorana/fermion_ops.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;

/// Bit vector over eta indices (Majoranas) followed by 2 bits per qubit.
std::vector<uint8_t> bits_of(const MQS &s, uint32_t n_eta, uint32_t n_q) {
    std::vector<uint8_t> v(n_eta + 2 * n_q, 0);
    for (uint32_t e : s.majoranas()) v[e] = 1;
    for (const auto &[q, l] : s.paulis()) {
        uint8_t b = static_cast<uint8_t>(l);
        v[n_eta + 2 * q] = b & 1;
        v[n_eta + 2 * q + 1] = (b >> 1) & 1;
    }
    return v;
}

}  // namespace

MQS hermitian_product(const std::vector<uint32_t> &eta) {
    std::vector<uint32_t> sorted = eta;
    std::sort(sorted.begin(), sorted.end());
    int w = static_cast<int>(sorted.size());
    if (w % 2) {
        throw std::invalid_argument("generators must have even Majorana weight");
    }
    return MQS::from_factors(sorted, Phase::from_power(w / 2));
}

MQS shift_sites(const MQS &s, uint32_t offset) {
    std::vector<uint32_t> eta;
    for (uint32_t e : s.majoranas()) eta.push_back(e + 2 * offset);
    MQS out = MQS::from_factors(eta, s.phase());
    for (const auto &[q, l] : s.paulis()) out = out * MQS::pauli(q, l);
    return out;
}

std::vector<std::string> StabilizerCode::violations() const {
    std::vector<std::string> out;
    for (size_t a = 0; a < generators.size(); a++) {
        const MQS &g = generators[a];
        if (!g.is_hermitian()) out.push_back("generator " + g.str() + " is not Hermitian");
        if (!g.squares_to_one()) out.push_back("generator " + g.str() + " does not square to one");
        if (g.max_site_plus_one() > n_sites) out.push_back("generator " + g.str() + " leaves the code");
        for (size_t b = a + 1; b < generators.size(); b++) {
            if (commutation_class(g, generators[b]) == Commutation::Anticommutes) {
                out.push_back("generators " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
            }
        }
        for (const MQS *l : {&logical_gamma, &logical_gamma_tilde}) {
            if (commutation_class(g, *l) == Commutation::Anticommutes) {
                out.push_back("logical " + l->str() + " anticommutes with generator " + std::to_string(a));
            }
        }
    }
    if (generators.size() + 1 != n_sites) out.push_back("generator count is not n_sites - 1");
    if (support_rank(generators) != generators.size()) out.push_back("generators are dependent");
    if (!logical_gamma.is_fermionic() || !logical_gamma_tilde.is_fermionic()) out.push_back("logicals must have odd weight");
    if (commutation_class(logical_gamma, logical_gamma_tilde) != Commutation::Anticommutes) {
        out.push_back("logicals commute");
    }
    if (!logical_gamma.is_hermitian() || !logical_gamma_tilde.is_hermitian()) out.push_back("logicals are not Hermitian");
    return out;
}

OperatorSum StabilizerCode::logical_creation() const {
    return 0.5 * (OperatorSum(logical_gamma) + cplx(0, 1) * OperatorSum(logical_gamma_tilde));
}

OperatorSum StabilizerCode::logical_annihilation() const {
    return 0.5 * (OperatorSum(logical_gamma) - cplx(0, 1) * OperatorSum(logical_gamma_tilde));
}

OperatorSum StabilizerCode::logical_number() const {
    return logical_creation() * logical_annihilation();
}

StabilizerCode StabilizerCode::shifted(uint32_t offset) const {
    StabilizerCode c = *this;
    for (MQS &g : c.generators) g = shift_sites(g, offset);
    c.logical_gamma = shift_sites(logical_gamma, offset);
    c.logical_gamma_tilde = shift_sites(logical_gamma_tilde, offset);
    for (Plaquette &p : c.layout.plaquettes)
        for (uint32_t &s : p.sites) s += offset;
    return c;
}

nlohmann::json StabilizerCode::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const MQS &g : generators) gens.push_back(g.str());
    nlohmann::json plaq = nlohmann::json::array();
    for (const Plaquette &p : layout.plaquettes) plaq.push_back({{"sites", p.sites}, {"color", p.color}});
    nlohmann::json coords = nlohmann::json::array();
    for (const auto &[r, c] : layout.coords) coords.push_back({r, c});
    return {{"name", name},
            {"sites", n_sites},
            {"distance", distance},
            {"generators", gens},
            {"logical_gamma", logical_gamma.str()},
            {"logical_gamma_tilde", logical_gamma_tilde.str()},
            {"layout", {{"kind", layout.kind}, {"coords", coords}, {"plaquettes", plaq}}}};
}

StabilizerCode build_repetition(uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("repetition code needs at least 2 sites");
    }
    StabilizerCode c;
    c.name = "repetition";
    c.n_sites = n;
    c.distance = n;
    for (uint32_t i = 0; i + 1 < n; i++) {
        c.generators.push_back(MQS::gamma_tilde(i, Phase::i()) * MQS::gamma(i + 1));
    }
    c.logical_gamma = MQS::gamma(0);
    c.logical_gamma_tilde = MQS::gamma_tilde(n - 1);
    c.layout.kind = "chain";
    for (uint32_t i = 0; i < n; i++) c.layout.coords.emplace_back(0, static_cast<int>(i));
    return c;
}

StabilizerCode from_css(const BinaryMatrix &x_checks, const BinaryMatrix &z_checks, std::string name) {
    size_t n = 0;
    for (const auto *m : {&x_checks, &z_checks})
        for (const auto &row : *m) n = std::max(n, row.size());
    if (n % 2 == 0) {
        throw std::invalid_argument("css construction needs an odd number of sites");
    }
    StabilizerCode c;
    c.name = std::move(name);
    c.n_sites = static_cast<uint32_t>(n);
    auto add = [&](const BinaryMatrix &m, uint32_t kind) {
        for (const auto &row : m) {
            std::vector<uint32_t> eta;
            std::vector<uint32_t> sites;
            for (size_t i = 0; i < row.size(); i++) {
                if (row[i]) {
                    eta.push_back(static_cast<uint32_t>(2 * i + kind));
                    sites.push_back(static_cast<uint32_t>(i));
                }
            }
            c.generators.push_back(hermitian_product(eta));
            c.layout.plaquettes.push_back({sites, static_cast<int>(kind)});
        }
    };
    add(z_checks, 0);
    add(x_checks, 1);
    set_total_parity_logicals(c);
    c.layout.kind = "css";
    for (const MQS &a : c.generators) {
        for (const MQS &b : c.generators) {
            if (commutation_class(a, b) == Commutation::Anticommutes) {
                throw std::invalid_argument("css input gives anticommuting generators");
            }
        }
    }
    return c;
}

void set_total_parity_logicals(StabilizerCode &code) {
    const uint32_t n = code.n_sites;
    std::vector<uint32_t> all_g, all_gt;
    for (uint32_t i = 0; i < n; i++) {
        all_g.push_back(2 * i);
        all_gt.push_back(2 * i + 1);
    }
    // Odd products of Hermitian Majoranas need i^(n(n-1)/2) to be Hermitian.
    Phase ph = Phase::from_power(static_cast<int>((uint64_t{n} * (n - 1) / 2) % 4));
    code.logical_gamma = MQS::from_factors(all_g, ph);
    code.logical_gamma_tilde = MQS::from_factors(all_gt, ph);
    MQS vacuum_parity;
    for (uint32_t i = 0; i < n; i++) vacuum_parity = vacuum_parity * MQS::parity(i);
    MQS logical_parity = Phase::i() * (code.logical_gamma * code.logical_gamma_tilde);
    GroupMembership m = group_membership(code.generators, logical_parity * vacuum_parity);
    if (m.in_group && m.phase == Phase::minus_one()) {
        code.logical_gamma_tilde = Phase::minus_one() * code.logical_gamma_tilde;
    }
}

BinaryMatrix hamming_checks() {
    BinaryMatrix h(3, std::vector<uint8_t>(7, 0));
    for (uint32_t col = 0; col < 7; col++)
        for (uint32_t bit = 0; bit < 3; bit++) h[bit][col] = ((col + 1) >> bit) & 1;
    return h;
}

std::vector<int> syndrome_of(const std::vector<MQS> &generators, const MQS &s) {
    std::vector<int> out;
    for (const MQS &g : generators) out.push_back(commutation_class(g, s) == Commutation::Anticommutes);
    return out;
}

GroupMembership group_membership(const std::vector<MQS> &generators, const MQS &s) {
    uint32_t n_eta = 0, n_q = 0;
    for (const MQS *x : {&s}) {
        n_eta = std::max(n_eta, 2 * x->max_site_plus_one());
        n_q = std::max(n_q, x->max_qubit_plus_one());
    }
    for (const MQS &g : generators) {
        n_eta = std::max(n_eta, 2 * g.max_site_plus_one());
        n_q = std::max(n_q, g.max_qubit_plus_one());
    }
    const size_t k = generators.size();
    const size_t width = n_eta + 2 * n_q;
    // Augmented elimination: rows are generator bit vectors plus an identity tag.
    std::vector<std::vector<uint8_t>> rows;
    for (size_t a = 0; a < k; a++) {
        auto v = bits_of(generators[a], n_eta, n_q);
        v.resize(width + k, 0);
        v[width + a] = 1;
        rows.push_back(v);
    }
    auto target = bits_of(s, n_eta, n_q);
    target.resize(width + k, 0);
    size_t r = 0;
    for (size_t col = 0; col < width && r < rows.size(); col++) {
        size_t piv = r;
        while (piv < rows.size() && !rows[piv][col]) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t o = 0; o < rows.size(); o++) {
            if (o != r && rows[o][col]) {
                for (size_t c = 0; c < rows[o].size(); c++) rows[o][c] ^= rows[r][c];
            }
        }
        if (target[col]) {
            for (size_t c = 0; c < target.size(); c++) target[c] ^= rows[r][c];
        }
        r++;
    }
    for (size_t col = 0; col < width; col++) {
        if (target[col]) return {};
    }
    GroupMembership m;
    m.in_group = true;
    MQS prod;
    for (size_t a = 0; a < k; a++) {
        if (target[width + a]) {
            m.combination.push_back(a);
            prod = prod * generators[a];
        }
    }
    // s = c * prod  =>  c = phase(s) / phase(prod) once the operator parts agree.
    m.phase = s.phase() * prod.phase().conj();
    return m;
}

size_t support_rank(const std::vector<MQS> &strings) {
    uint32_t n_eta = 0, n_q = 0;
    for (const MQS &g : strings) {
        n_eta = std::max(n_eta, 2 * g.max_site_plus_one());
        n_q = std::max(n_q, g.max_qubit_plus_one());
    }
    std::vector<std::vector<uint8_t>> rows;
    for (const MQS &g : strings) rows.push_back(bits_of(g, n_eta, n_q));
    size_t r = 0;
    const size_t width = n_eta + 2 * n_q;
    for (size_t col = 0; col < width && r < rows.size(); col++) {
        size_t piv = r;
        while (piv < rows.size() && !rows[piv][col]) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t o = r + 1; o < rows.size(); o++) {
            if (rows[o][col]) {
                for (size_t c = 0; c < width; c++) rows[o][c] ^= rows[r][c];
            }
        }
        r++;
    }
    return r;
}

}  // namespace fqc
