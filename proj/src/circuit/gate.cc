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

#include "fqc/circuit/gate.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fqc {

namespace {

constexpr RegisterKind Q = RegisterKind::Qubit;
constexpr RegisterKind F = RegisterKind::Fermion;
constexpr RegisterKind B = RegisterKind::Boson;

struct Entry {
    GateKind kind;
    GateInfo info;
};

const std::vector<Entry> &table() {
    static const std::vector<Entry> t = {
        {GateKind::Tf, {"Tf", {F}, false, false}},
        {GateKind::TfDag, {"Tf_DAG", {F}, false, false}},
        {GateKind::Sf, {"Sf", {F}, false, false}},
        {GateKind::SfDag, {"Sf_DAG", {F}, false, false}},
        {GateKind::Zf, {"Zf", {F}, false, false}},
        {GateKind::PhaseF, {"PHASEf", {F}, true, false}},
        {GateKind::H, {"H", {Q}, false, false}},
        {GateKind::S, {"S", {Q}, false, false}},
        {GateKind::Sdg, {"S_DAG", {Q}, false, false}},
        {GateKind::X, {"X", {Q}, false, false}},
        {GateKind::Z, {"Z", {Q}, false, false}},
        {GateKind::T, {"T", {Q}, false, false}},
        {GateKind::Tdg, {"T_DAG", {Q}, false, false}},
        {GateKind::PhaseQ, {"PHASEq", {Q}, true, false}},
        {GateKind::Xrot, {"Xrot", {Q}, true, false}},
        {GateKind::CNOT, {"CNOT", {Q, Q}, false, false}},
        {GateKind::CZ, {"CZ", {Q, Q}, false, false}},
        {GateKind::SWAP, {"SWAP", {Q, Q}, false, false}},
        {GateKind::XXq, {"XXq", {Q, Q}, false, false}},
        {GateKind::Braid, {"BRAID", {F, F}, false, false}},
        {GateKind::BraidDag, {"BRAID_DAG", {F, F}, false, false}},
        {GateKind::BraidTheta, {"BRAIDtheta", {F, F}, true, false}},
        {GateKind::CZf, {"CZf", {F, F}, false, false}},
        {GateKind::CZfTheta, {"CZftheta", {F, F}, true, false}},
        {GateKind::SqrtISwapF, {"SQRT_ISWAPf", {F, F}, false, false}},
        {GateKind::UTDown, {"U_TDOWN", {F, F}, true, false}},
        {GateKind::UUpDown, {"U_UPDOWN", {F, F}, true, false}},
        {GateKind::PairIdeal, {"PAIR_IDEAL", {F, F}, true, false}},
        {GateKind::CZqf, {"CZqf", {Q, F}, false, false}},
        {GateKind::CZqfTheta, {"CZqftheta", {Q, F}, true, false}},
        {GateKind::BS, {"BS", {B, B}, true, false}},
        {GateKind::UDiss, {"U_DISS", {B, F, F}, true, true}},
        {GateKind::Pair, {"PAIR", {B, F, F}, true, true}},
    };
    return t;
}

Gate make(GateKind k, std::vector<uint32_t> t, Angle a = {}, double n = 0) {
    Gate g{k, std::move(t), a, n};
    validate(g);
    return g;
}

}  // namespace

std::string Target::str() const {
    char c = kind == RegisterKind::Qubit ? 'q' : kind == RegisterKind::Fermion ? 'f' : 'b';
    return c + std::to_string(index);
}

Target Target::parse(std::string_view text) {
    if (text.size() < 2) {
        throw std::invalid_argument("bad target '" + std::string(text) + "'");
    }
    Target t;
    switch (text[0]) {
        case 'q':
            t.kind = RegisterKind::Qubit;
            break;
        case 'f':
            t.kind = RegisterKind::Fermion;
            break;
        case 'b':
            t.kind = RegisterKind::Boson;
            break;
        default:
            throw std::invalid_argument("bad target '" + std::string(text) + "'");
    }
    size_t used = 0;
    std::string digits(text.substr(1));
    t.index = static_cast<uint32_t>(std::stoul(digits, &used));
    if (used != digits.size()) {
        throw std::invalid_argument("bad target '" + std::string(text) + "'");
    }
    return t;
}

const GateInfo &gate_info(GateKind kind) {
    for (const auto &e : table()) {
        if (e.kind == kind) {
            return e.info;
        }
    }
    throw std::logic_error("unknown gate kind");
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &e : table()) {
        if (name == e.info.name) {
            return e.kind;
        }
    }
    return std::nullopt;
}

const std::vector<GateKind> &all_gate_kinds() {
    static const std::vector<GateKind> kinds = [] {
        std::vector<GateKind> v;
        for (const auto &e : table()) {
            v.push_back(e.kind);
        }
        return v;
    }();
    return kinds;
}

Target Gate::target(size_t k) const { return {gate_info(kind).signature.at(k), targets.at(k)}; }

std::vector<Target> Gate::typed_targets() const {
    std::vector<Target> out;
    for (size_t k = 0; k < targets.size(); k++) {
        out.push_back(target(k));
    }
    return out;
}

std::string Gate::str() const {
    std::ostringstream out;
    const GateInfo &info = gate_info(kind);
    out << info.name;
    if (info.has_angle || info.has_molecules) {
        out << '(';
        if (info.has_molecules) {
            out << "N=" << molecules << ", ";
        }
        out << angle.str() << ')';
    }
    for (const Target &t : typed_targets()) {
        out << ' ' << t.str();
    }
    return out.str();
}

bool Gate::operator==(const Gate &o) const {
    return kind == o.kind && targets == o.targets && angle == o.angle && molecules == o.molecules;
}

void validate(const Gate &g) {
    const GateInfo &info = gate_info(g.kind);
    if (g.targets.size() != info.signature.size()) {
        throw std::invalid_argument(std::string(info.name) + " expects " + std::to_string(info.signature.size()) +
                                    " targets");
    }
    std::vector<Target> t = g.typed_targets();
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
        throw std::invalid_argument(std::string(info.name) + " has repeated targets");
    }
    if (!std::isfinite(g.angle.radians()) || !std::isfinite(g.molecules) || g.molecules < 0) {
        throw std::invalid_argument(std::string(info.name) + " has a non-finite parameter");
    }
}

bool is_clifford(const Gate &g) {
    switch (g.kind) {
        case GateKind::Sf:
        case GateKind::SfDag:
        case GateKind::Zf:
        case GateKind::H:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::XXq:
        case GateKind::Braid:
        case GateKind::BraidDag:
        case GateKind::CZf:
        case GateKind::CZqf:
            return true;
        case GateKind::PhaseF:
        case GateKind::PhaseQ:
        case GateKind::Xrot:
        case GateKind::BraidTheta:
            return g.angle.is_multiple_of_pi(1, 2);
        case GateKind::CZfTheta:
        case GateKind::CZqfTheta:
            return g.angle.is_multiple_of_pi(1, 1);
        case GateKind::UTDown:
        case GateKind::UUpDown:
            // Hopping by theta is a product of two rotations by theta/2.
            return g.angle.is_multiple_of_pi(1, 2);
        default:
            return false;
    }
}

bool is_single_fermion(const Gate &g) {
    const auto &sig = gate_info(g.kind).signature;
    return sig.size() == 1 && sig[0] == RegisterKind::Fermion;
}

bool is_braid_class(const Gate &g) {
    return g.kind == GateKind::Braid || g.kind == GateKind::BraidDag || g.kind == GateKind::BraidTheta;
}

bool touches_boson(const Gate &g) {
    for (RegisterKind k : gate_info(g.kind).signature) {
        if (k == RegisterKind::Boson) {
            return true;
        }
    }
    return false;
}

std::vector<Gate> inverse(const Gate &g) {
    auto with = [&](GateKind k) {
        Gate out = g;
        out.kind = k;
        return std::vector<Gate>{out};
    };
    auto negated = [&]() {
        Gate out = g;
        out.angle = -g.angle;
        return std::vector<Gate>{out};
    };
    auto shifted = [&]() {
        Gate out = g;
        out.angle = g.angle + Angle::pi_fraction(1);
        return std::vector<Gate>{out};
    };
    switch (g.kind) {
        case GateKind::Tf:
            return with(GateKind::TfDag);
        case GateKind::TfDag:
            return with(GateKind::Tf);
        case GateKind::Sf:
            return with(GateKind::SfDag);
        case GateKind::SfDag:
            return with(GateKind::Sf);
        case GateKind::S:
            return with(GateKind::Sdg);
        case GateKind::Sdg:
            return with(GateKind::S);
        case GateKind::T:
            return with(GateKind::Tdg);
        case GateKind::Tdg:
            return with(GateKind::T);
        case GateKind::Braid:
            return with(GateKind::BraidDag);
        case GateKind::BraidDag:
            return with(GateKind::Braid);
        case GateKind::Zf:
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::CZf:
        case GateKind::CZqf:
            return {g};
        case GateKind::XXq:
            return {gates::x(g.targets[0]), gates::x(g.targets[1]), g};
        case GateKind::SqrtISwapF:
            return {gates::u_tdown(g.targets[0], g.targets[1], Angle::pi_fraction(1, 4))};
        case GateKind::PairIdeal:
        case GateKind::UDiss:
        case GateKind::Pair:
            return shifted();
        default:
            return negated();
    }
}

namespace gates {
Gate tf(uint32_t f) { return make(GateKind::Tf, {f}); }
Gate tf_dag(uint32_t f) { return make(GateKind::TfDag, {f}); }
Gate sf(uint32_t f) { return make(GateKind::Sf, {f}); }
Gate sf_dag(uint32_t f) { return make(GateKind::SfDag, {f}); }
Gate zf(uint32_t f) { return make(GateKind::Zf, {f}); }
Gate phase_f(uint32_t f, Angle theta) { return make(GateKind::PhaseF, {f}, theta); }
Gate h(uint32_t q) { return make(GateKind::H, {q}); }
Gate s(uint32_t q) { return make(GateKind::S, {q}); }
Gate sdg(uint32_t q) { return make(GateKind::Sdg, {q}); }
Gate x(uint32_t q) { return make(GateKind::X, {q}); }
Gate z(uint32_t q) { return make(GateKind::Z, {q}); }
Gate t(uint32_t q) { return make(GateKind::T, {q}); }
Gate tdg(uint32_t q) { return make(GateKind::Tdg, {q}); }
Gate phase_q(uint32_t q, Angle theta) { return make(GateKind::PhaseQ, {q}, theta); }
Gate xrot(uint32_t q, Angle theta) { return make(GateKind::Xrot, {q}, theta); }
Gate cnot(uint32_t c, uint32_t t) { return make(GateKind::CNOT, {c, t}); }
Gate cz(uint32_t a, uint32_t b) { return make(GateKind::CZ, {a, b}); }
Gate swap(uint32_t a, uint32_t b) { return make(GateKind::SWAP, {a, b}); }
Gate xxq(uint32_t a, uint32_t b) { return make(GateKind::XXq, {a, b}); }
Gate braid(uint32_t i, uint32_t j) { return make(GateKind::Braid, {i, j}); }
Gate braid_dag(uint32_t i, uint32_t j) { return make(GateKind::BraidDag, {i, j}); }
Gate braid_theta(uint32_t i, uint32_t j, Angle theta) { return make(GateKind::BraidTheta, {i, j}, theta); }
Gate czf(uint32_t i, uint32_t j) { return make(GateKind::CZf, {i, j}); }
Gate czf_theta(uint32_t i, uint32_t j, Angle theta) { return make(GateKind::CZfTheta, {i, j}, theta); }
Gate sqrt_iswap_f(uint32_t i, uint32_t j) { return make(GateKind::SqrtISwapF, {i, j}); }
Gate u_tdown(uint32_t i, uint32_t j, Angle theta) { return make(GateKind::UTDown, {i, j}, theta); }
Gate u_updown(uint32_t up, uint32_t down, Angle theta) { return make(GateKind::UUpDown, {up, down}, theta); }
Gate pair_ideal(uint32_t i, uint32_t j, Angle phi) { return make(GateKind::PairIdeal, {i, j}, phi); }
Gate czqf(uint32_t q, uint32_t f) { return make(GateKind::CZqf, {q, f}); }
Gate czqf_theta(uint32_t q, uint32_t f, Angle theta) { return make(GateKind::CZqfTheta, {q, f}, theta); }
Gate bs(uint32_t a, uint32_t b, Angle theta) { return make(GateKind::BS, {a, b}, theta); }
Gate u_diss(uint32_t b, uint32_t up, uint32_t down, double n, Angle phi) {
    return make(GateKind::UDiss, {b, up, down}, phi, n);
}
Gate pair(uint32_t b, uint32_t i, uint32_t j, double n, Angle phi) { return make(GateKind::Pair, {b, i, j}, phi, n); }
}  // namespace gates

}  // namespace fqc
