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

#include "fqc/circuit/conjugate.h"

#include <algorithm>
#include <cmath>

namespace fqc {

namespace {

using MQS = MajoranaQubitString;

double snap(double v) {
    if (std::abs(v) < 1e-15) {
        return 0;
    }
    if (std::abs(v - 1) < 1e-15) {
        return 1;
    }
    if (std::abs(v + 1) < 1e-15) {
        return -1;
    }
    return v;
}

MQS g(uint32_t i) { return MQS::gamma(i); }
MQS gt(uint32_t i) { return MQS::gamma_tilde(i); }
MQS zf(uint32_t i) { return MQS::parity(i); }
MQS pauli(uint32_t q, PauliLetter l, Phase ph = {}) { return MQS::pauli(q, l, ph); }

/// exp(beta P) with P^2 = -1.
struct Rotation {
    double beta;
    MQS p;
};

/// U^dagger s U for U = exp(beta P): s if they commute, else s (cos 2beta + sin 2beta P).
OperatorSum rotate(const OperatorSum &in, const Rotation &r) {
    OperatorSum out;
    double c = snap(std::cos(2 * r.beta));
    double sn = snap(std::sin(2 * r.beta));
    for (const auto &[s, coef] : in.terms()) {
        if (commutation_class(s, r.p) == Commutation::Commutes) {
            out.add(coef, s);
        } else {
            out.add(coef * c, s);
            out.add(coef * sn, s * r.p);
        }
    }
    out.prune(1e-13);
    return out;
}

/// Rotation form of exp(-i theta n_f) up to global phase.
std::vector<Rotation> fermion_phase(uint32_t f, double theta) { return {{theta / 2, zf(f).with_phase(Phase::i() * zf(f).phase())}}; }

std::vector<Rotation> qubit_phase(uint32_t q, double theta) {
    return {{theta / 2, pauli(q, PauliLetter::Z, Phase::i())}};
}

/// exp(i alpha (p_i^+ p_j + h.c.)) = exp(-alpha/2 gt_i g_j) exp(alpha/2 g_i gt_j)
std::vector<Rotation> hopping(uint32_t i, uint32_t j, double alpha) {
    return {{-alpha / 2, gt(i) * g(j)}, {alpha / 2, g(i) * gt(j)}};
}

/// exp(i alpha (p_i^+ p_j^+ + h.c.)) = exp(-alpha/2 g_i gt_j) exp(-alpha/2 gt_i g_j)
std::vector<Rotation> pairing(uint32_t i, uint32_t j, double alpha) {
    return {{-alpha / 2, g(i) * gt(j)}, {-alpha / 2, gt(i) * g(j)}};
}

/// exp(-i theta n_a n_b) with Z-type parities za, zb, up to global phase.
std::vector<Rotation> number_number(const MQS &za, const MQS &zb, double theta) {
    auto iz = [](const MQS &m) { return m.with_phase(Phase::i() * m.phase()); };
    return {{theta / 4, iz(za)}, {theta / 4, iz(zb)}, {-theta / 4, iz(za * zb)}};
}

/// Heisenberg image of a single factor under one of the tabulated gates, or nullopt if untouched.
std::optional<MQS> table_image(const Gate &gate, const MQS &factor) {
    const auto &t = gate.targets;
    auto is = [&](const MQS &m) { return factor.same_operator(m); };
    switch (gate.kind) {
        case GateKind::Sf:
            if (is(g(t[0]))) return gt(t[0]);
            if (is(gt(t[0]))) return g(t[0]).with_phase(Phase::minus_one());
            return std::nullopt;
        case GateKind::Zf:
            if (is(g(t[0])) || is(gt(t[0]))) return factor.with_phase(Phase::minus_one());
            return std::nullopt;
        case GateKind::H:
            if (is(pauli(t[0], PauliLetter::X))) return pauli(t[0], PauliLetter::Z);
            if (is(pauli(t[0], PauliLetter::Z))) return pauli(t[0], PauliLetter::X);
            if (is(pauli(t[0], PauliLetter::Y))) return pauli(t[0], PauliLetter::Y, Phase::minus_one());
            return std::nullopt;
        case GateKind::Z:
            if (is(pauli(t[0], PauliLetter::X)) || is(pauli(t[0], PauliLetter::Y))) return factor.with_phase(Phase::minus_one());
            return std::nullopt;
        case GateKind::Braid:
            if (is(gt(t[0]))) return g(t[1]).with_phase(Phase::minus_one());
            if (is(g(t[1]))) return gt(t[0]);
            return std::nullopt;
        case GateKind::CZf:
            if (is(g(t[0])) || is(gt(t[0]))) return factor * zf(t[1]);
            if (is(g(t[1])) || is(gt(t[1]))) return zf(t[0]) * factor;
            return std::nullopt;
        case GateKind::CZqf:
            if (is(g(t[1])) || is(gt(t[1]))) return pauli(t[0], PauliLetter::Z) * factor;
            if (is(pauli(t[0], PauliLetter::X)) || is(pauli(t[0], PauliLetter::Y))) return zf(t[1]) * factor;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

bool is_table_kind(GateKind k) {
    switch (k) {
        case GateKind::Tf:
        case GateKind::Sf:
        case GateKind::Zf:
        case GateKind::H:
        case GateKind::Z:
        case GateKind::Braid:
        case GateKind::CZf:
        case GateKind::CZqf:
            return true;
        default:
            return false;
    }
}

OperatorSum table_conjugate(const Gate &gate, const MQS &s) {
    OperatorSum acc = OperatorSum::identity(s.phase().value());
    auto apply_factor = [&](const MQS &factor) {
        if (gate.kind == GateKind::Tf) {
            uint32_t f = gate.targets[0];
            const double r = 1 / std::sqrt(2.0);
            if (factor.same_operator(g(f))) {
                OperatorSum img(r, gt(f));
                img.add(r, g(f));
                return acc * img;
            }
            if (factor.same_operator(gt(f))) {
                OperatorSum img(r, gt(f));
                img.add(-r, g(f));
                return acc * img;
            }
            return acc * OperatorSum(factor);
        }
        auto img = table_image(gate, factor);
        return acc * OperatorSum(img ? *img : factor);
    };
    for (uint32_t eta : s.majoranas()) {
        acc = apply_factor(MQS::majorana(MajoranaIndex::from_flat(eta)));
    }
    for (const auto &[q, l] : s.paulis()) {
        acc = apply_factor(pauli(q, l));
    }
    return acc;
}

/// Qubit Cliffords given by images of X and Z on each target.
OperatorSum qubit_clifford(const Gate &gate, const MQS &s) {
    const auto &t = gate.targets;
    auto image = [&](uint32_t q, PauliLetter l) -> MQS {
        auto X = [](uint32_t k) { return pauli(k, PauliLetter::X); };
        auto Z = [](uint32_t k) { return pauli(k, PauliLetter::Z); };
        if (l == PauliLetter::Y) {
            // Y = i X Z
            MQS y = Phase::i() * [&] {
                MQS xi, zi;
                switch (gate.kind) {
                    case GateKind::X:
                        xi = X(q);
                        zi = Z(q).with_phase(Phase::minus_one());
                        break;
                    case GateKind::CNOT:
                        xi = q == t[0] ? X(t[0]) * X(t[1]) : X(q);
                        zi = q == t[1] ? Z(t[0]) * Z(t[1]) : Z(q);
                        break;
                    case GateKind::CZ:
                        xi = X(q) * Z(q == t[0] ? t[1] : t[0]);
                        zi = Z(q);
                        break;
                    default:  // SWAP
                        xi = X(q == t[0] ? t[1] : t[0]);
                        zi = Z(q == t[0] ? t[1] : t[0]);
                }
                return xi * zi;
            }();
            return y;
        }
        bool is_x = l == PauliLetter::X;
        switch (gate.kind) {
            case GateKind::X:
                return is_x ? X(q) : Z(q).with_phase(Phase::minus_one());
            case GateKind::CNOT:
                if (is_x) return q == t[0] ? X(t[0]) * X(t[1]) : X(q);
                return q == t[1] ? Z(t[0]) * Z(t[1]) : Z(q);
            case GateKind::CZ:
                if (is_x) return X(q) * Z(q == t[0] ? t[1] : t[0]);
                return Z(q);
            default: {
                uint32_t o = q == t[0] ? t[1] : t[0];
                return is_x ? X(o) : Z(o);
            }
        }
    };
    MQS out = MQS().with_phase(s.phase()) * MQS::from_factors(s.majoranas());
    for (const auto &[q, l] : s.paulis()) {
        bool hit = std::find(t.begin(), t.end(), q) != t.end();
        out = out * (hit ? image(q, l) : pauli(q, l));
    }
    return OperatorSum(out);
}

/// Rotation decomposition of gates outside the table. Returns false for gates needing special handling.
bool rotation_form(const Gate &gate, std::vector<Rotation> &out) {
    const auto &t = gate.targets;
    const double th = gate.angle.radians();
    const double pi = M_PI;
    switch (gate.kind) {
        case GateKind::TfDag:
            out = fermion_phase(t[0], pi / 4);
            return true;
        case GateKind::SfDag:
            out = fermion_phase(t[0], pi / 2);
            return true;
        case GateKind::PhaseF:
            out = fermion_phase(t[0], th);
            return true;
        case GateKind::S:
            out = qubit_phase(t[0], -pi / 2);
            return true;
        case GateKind::Sdg:
            out = qubit_phase(t[0], pi / 2);
            return true;
        case GateKind::T:
            out = qubit_phase(t[0], -pi / 4);
            return true;
        case GateKind::Tdg:
            out = qubit_phase(t[0], pi / 4);
            return true;
        case GateKind::PhaseQ:
            out = qubit_phase(t[0], th);
            return true;
        case GateKind::Xrot:
            out = {{-th / 2, pauli(t[0], PauliLetter::X, Phase::i())}};
            return true;
        case GateKind::XXq:
            out = {{pi / 4, pauli(t[0], PauliLetter::X, Phase::i()) * pauli(t[1], PauliLetter::X)}};
            return true;
        case GateKind::BraidDag:
            out = {{pi / 4, gt(t[0]) * g(t[1])}};
            return true;
        case GateKind::BraidTheta:
            out = {{-th / 2, gt(t[0]) * g(t[1])}};
            return true;
        case GateKind::CZfTheta:
            out = number_number(zf(t[0]), zf(t[1]), th);
            return true;
        case GateKind::CZqfTheta:
            out = number_number(pauli(t[0], PauliLetter::Z), zf(t[1]), th);
            return true;
        case GateKind::SqrtISwapF:
            out = hopping(t[0], t[1], pi / 4);
            return true;
        case GateKind::UTDown:
        case GateKind::UUpDown:
            out = hopping(t[0], t[1], -th);
            return true;
        default:
            return false;
    }
}

OperatorSum apply_rotations(const std::vector<Rotation> &rots, OperatorSum s) {
    for (const Rotation &r : rots) {
        s = rotate(s, r);
    }
    return s;
}

}  // namespace

bool supports_symbolic(const Gate &gate) { return !touches_boson(gate); }

OperatorSum conjugate(const Gate &gate, const MajoranaQubitString &s, const ConjugationOptions &opt) {
    if (touches_boson(gate)) {
        throw SymbolicError(gate.name() + " is non-Clifford and acts on bosons; use exact-sim");
    }
    OperatorSum out;
    std::vector<Rotation> rots;
    if (is_table_kind(gate.kind)) {
        out = table_conjugate(gate, s);
    } else if (gate.kind == GateKind::X || gate.kind == GateKind::CNOT || gate.kind == GateKind::CZ ||
               gate.kind == GateKind::SWAP) {
        out = qubit_clifford(gate, s);
    } else if (gate.kind == GateKind::PairIdeal) {
        // exp(i phi n_j) PAIR(0) exp(-i phi n_j); fold the three pieces in reverse time order.
        const auto &t = gate.targets;
        double phi = gate.angle.radians();
        OperatorSum x(s);
        x = apply_rotations(fermion_phase(t[1], -phi), x);
        x = apply_rotations(pairing(t[0], t[1], M_PI / 4), x);
        out = apply_rotations(fermion_phase(t[1], phi), x);
    } else if (rotation_form(gate, rots)) {
        out = apply_rotations(rots, OperatorSum(s));
    } else {
        throw SymbolicError("no symbolic rule for " + gate.name());
    }
    if (opt.corrupt_kind && *opt.corrupt_kind == gate.kind) {
        if (out.max_abs_difference(OperatorSum(s)) > 1e-12) {
            out *= -1.0;
        }
    }
    return out;
}

OperatorSum conjugate(const Gate &gate, const OperatorSum &s, const ConjugationOptions &opt) {
    OperatorSum out;
    for (const auto &[str, c] : s.terms()) {
        OperatorSum img = conjugate(gate, str, opt);
        img *= c;
        out += img;
    }
    out.prune(1e-13);
    return out;
}

OperatorSum conjugate_circuit(const Circuit &c, const MajoranaQubitString &s, const ConjugationOptions &opt) {
    return conjugate_circuit(c, OperatorSum(s), opt);
}

OperatorSum conjugate_circuit(const Circuit &c, const OperatorSum &s, const ConjugationOptions &opt) {
    OperatorSum acc = s;
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
        if (const auto *gate = std::get_if<Gate>(&*it)) {
            acc = conjugate(*gate, acc, opt);
        } else if (const auto *sw = std::get_if<MoveSwap>(&*it)) {
            OperatorSum next;
            for (const auto &[str, coef] : acc.terms()) {
                std::vector<uint32_t> eta;
                for (uint32_t e : str.majoranas()) {
                    uint32_t site = e / 2;
                    uint32_t kind = e & 1;
                    if (site == sw->a) {
                        site = sw->b;
                    } else if (site == sw->b) {
                        site = sw->a;
                    }
                    eta.push_back(2 * site + kind);
                }
                MQS moved = MQS::from_factors(eta);
                for (const auto &[q, l] : str.paulis()) {
                    moved = moved * MQS::pauli(q, l);
                }
                next.add(coef, moved);
            }
            acc = next;
        } else {
            throw SymbolicError("circuit contains measurement, reset or conditioned ops");
        }
    }
    return acc;
}

}  // namespace fqc
