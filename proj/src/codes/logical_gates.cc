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

#include "fqc/codes/logical_gates.h"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "fqc/circuit/braid_variants.h"
#include "fqc/circuit/conjugate.h"
#include "fqc/codes/encoding.h"
#include "fqc/codes/syndrome.h"
#include "fqc/sim/apply_gate.h"
#include "fqc/sim/apply_string.h"
#include "fqc/sim/measure.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;

bool is_repetition(const StabilizerCode &code) { return code.name == "repetition"; }

uint32_t block_count(LogicalGate g) { return (g == LogicalGate::Braid || g == LogicalGate::CZf) ? 2 : 1; }

std::vector<StabilizerCode> blocks_of(const StabilizerCode &code, uint32_t blocks) {
    std::vector<StabilizerCode> out{code};
    if (blocks == 2) out.push_back(code.shifted(code.n_sites));
    return out;
}

std::vector<MQS> all_generators(const std::vector<StabilizerCode> &blocks) {
    std::vector<MQS> out;
    for (const auto &b : blocks) out.insert(out.end(), b.generators.begin(), b.generators.end());
    return out;
}

/// Replaces bare Majorana f by the logical Majorana of block f.
MQS lift(const MQS &bare, const std::vector<StabilizerCode> &blocks) {
    MQS out = MQS().with_phase(bare.phase());
    for (uint32_t e : bare.majoranas()) {
        const StabilizerCode &b = blocks.at(e / 2);
        out = out * ((e & 1) ? b.logical_gamma_tilde : b.logical_gamma);
    }
    for (const auto &[q, l] : bare.paulis()) out = out * MQS::pauli(q, l);
    return out;
}

/// Controlled product of all site parities, fixed up to controlled Z^f_L.
Circuit controlled_parity(const StabilizerCode &code, uint32_t control) {
    MQS all;
    for (uint32_t i = 0; i < code.n_sites; i++) all = all * MQS::parity(i);
    MQS zl = Phase::i() * (code.logical_gamma * code.logical_gamma_tilde);
    GroupMembership m = group_membership(code.generators, zl * all);
    if (!m.in_group) {
        throw std::logic_error("total parity is not the logical parity times stabilizers");
    }
    Circuit c(Registers{control + 1, code.n_sites, {}});
    for (uint32_t i = 0; i < code.n_sites; i++) c.add(gates::czqf(control, i));
    if (m.phase == Phase::minus_one()) c.add(gates::z(control));
    return c;
}

// Particular solution of rows * x = rhs over GF(2), if any.
std::optional<std::vector<uint8_t>> solve_gf2(std::vector<std::vector<uint8_t>> rows, std::vector<uint8_t> rhs,
                                              size_t cols) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows.size(); col++) {
        size_t p = r;
        while (p < rows.size() && !rows[p][col]) p++;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        std::swap(rhs[r], rhs[p]);
        for (size_t o = 0; o < rows.size(); o++) {
            if (o != r && rows[o][col]) {
                for (size_t c = 0; c < cols; c++) rows[o][c] ^= rows[r][c];
                rhs[o] ^= rhs[r];
            }
        }
        piv.push_back(col);
        r++;
    }
    for (size_t o = r; o < rows.size(); o++)
        if (rhs[o]) return std::nullopt;
    std::vector<uint8_t> x(cols, 0);
    for (size_t k = 0; k < r; k++) x[piv[k]] = rhs[k];
    return x;
}

/// Fixed correction that re-signs the generators a transversal Clifford flips
/// (weight-6 plaquettes under Sf and BRAID). It anticommutes with exactly the
/// flipped generators and commutes with every logical. A set of Zf is used when
/// one exists, otherwise a general even Majorana string. Empty when nothing flips.
Circuit frame_fix(const std::vector<StabilizerCode> &blocks, const Circuit &u) {
    auto gens = all_generators(blocks);
    std::vector<MQS> logicals;
    for (const auto &b : blocks) {
        logicals.push_back(b.logical_gamma);
        logicals.push_back(b.logical_gamma_tilde);
    }
    uint32_t n = 0;
    for (const auto &b : blocks) n += b.n_sites;
    std::vector<uint8_t> flips;
    bool any = false;
    for (const MQS &g : gens) {
        auto img = conjugate_circuit(u, g).as_string(1e-12);
        if (!img) throw std::logic_error("transversal gate is not Clifford");
        GroupMembership m = group_membership(gens, *img);
        if (!m.in_group) throw std::logic_error("transversal gate leaves the stabilizer group");
        flips.push_back(m.phase == Phase::minus_one());
        any = any || flips.back();
    }
    Circuit fix(u.registers);
    if (!any) return fix;

    // Commutation with an even string g is the overlap parity; with an odd
    // logical it is overlap plus total weight, and total weight is forced even.
    auto build = [&](bool pairs) {
        const size_t cols = pairs ? n : 2 * n;
        auto col_of = [&](uint32_t eta) { return pairs ? eta / 2 : eta; };
        std::vector<std::vector<uint8_t>> rows;
        std::vector<uint8_t> rhs;
        auto add = [&](const MQS &s, uint8_t want) {
            std::vector<uint8_t> row(cols, 0);
            for (uint32_t e : s.majoranas()) row[col_of(e)] ^= 1;
            rows.push_back(row);
            rhs.push_back(want);
        };
        for (size_t k = 0; k < gens.size(); k++) add(gens[k], flips[k]);
        for (const MQS &l : logicals) add(l, 0);
        if (!pairs) {
            rows.emplace_back(cols, 1);
            rhs.push_back(0);
        }
        return solve_gf2(rows, rhs, cols);
    };
    if (auto x = build(true)) {
        for (uint32_t i = 0; i < n; i++)
            if ((*x)[i]) fix.add(gates::zf(i));
        return fix;
    }
    auto x = build(false);
    if (!x) throw std::logic_error("no frame correction exists");
    std::vector<uint32_t> eta;
    for (uint32_t e = 0; e < 2 * n; e++)
        if ((*x)[e]) eta.push_back(e);
    return fix.append(string_circuit(MQS::from_factors(eta)));
}

/// Moves gamma_0 onto site n-1 so that n_{n-1} reads as n_L.
Circuit edge_move(const StabilizerCode &code) {
    return braid_variant(BraidVariant::PlainPlain, 0, code.n_sites - 1);
}

}  // namespace

std::string logical_gate_name(LogicalGate g) {
    switch (g) {
        case LogicalGate::Braid:
            return "BRAID";
        case LogicalGate::CZf:
            return "CZf";
        case LogicalGate::CZqf:
            return "CZqf";
        case LogicalGate::Sf:
            return "Sf";
        case LogicalGate::Tf:
            return "Tf";
        case LogicalGate::Zf:
            return "Zf";
    }
    return "?";
}

LogicalGate logical_gate_from_name(const std::string &name) {
    for (LogicalGate g : all_logical_gates())
        if (logical_gate_name(g) == name) return g;
    throw std::invalid_argument("unknown logical gate " + name);
}

const std::vector<LogicalGate> &all_logical_gates() {
    static const std::vector<LogicalGate> all{LogicalGate::Braid, LogicalGate::CZf, LogicalGate::CZqf,
                                              LogicalGate::Sf,    LogicalGate::Tf,  LogicalGate::Zf};
    return all;
}

LogicalPlacement logical_placement(const StabilizerCode &code, LogicalGate g) {
    LogicalPlacement p;
    p.blocks = block_count(g);
    p.data_qubits = g == LogicalGate::CZqf ? 1 : 0;
    p.ancilla_qubits = (g == LogicalGate::Tf && !is_repetition(code)) ? 1 : 0;
    p.registers = Registers{p.data_qubits + p.ancilla_qubits, p.blocks * code.n_sites, {}};
    p.bare = Registers{p.data_qubits, p.blocks, {}};
    return p;
}

Gate bare_gate(LogicalGate g) {
    switch (g) {
        case LogicalGate::Braid:
            return gates::braid(0, 1);
        case LogicalGate::CZf:
            return gates::czf(0, 1);
        case LogicalGate::CZqf:
            return gates::czqf(0, 0);
        case LogicalGate::Sf:
            return gates::sf(0);
        case LogicalGate::Tf:
            return gates::tf(0);
        case LogicalGate::Zf:
            return gates::zf(0);
    }
    throw std::logic_error("unreachable");
}

Circuit shift_fermions(const Circuit &c, uint32_t offset) {
    auto shift_gate = [offset](Gate g) {
        const auto &sig = gate_info(g.kind).signature;
        for (size_t k = 0; k < g.targets.size(); k++)
            if (sig[k] == RegisterKind::Fermion) g.targets[k] += offset;
        return g;
    };
    Circuit out(c.registers);
    out.registers.fermions += offset;
    for (const Op &op : c.ops) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            out.add(shift_gate(*g));
        } else if (const auto *m = std::get_if<Measure>(&op)) {
            Measure mm = *m;
            if (mm.target.kind == RegisterKind::Fermion) mm.target.index += offset;
            out.ops.push_back(mm);
        } else if (const auto *cg = std::get_if<Conditioned>(&op)) {
            out.ops.push_back(Conditioned{cg->when, shift_gate(cg->gate)});
        } else if (const auto *r = std::get_if<Reset>(&op)) {
            Reset rr = *r;
            if (rr.target.kind == RegisterKind::Fermion) rr.target.index += offset;
            out.ops.push_back(rr);
        } else if (const auto *s = std::get_if<MoveSwap>(&op)) {
            out.move_swap(s->a + offset, s->b + offset);
        }
    }
    return out;
}

Circuit logical_circuit(const StabilizerCode &code, LogicalGate g) {
    const uint32_t n = code.n_sites;
    LogicalPlacement p = logical_placement(code, g);
    Circuit c(p.registers);
    if (is_repetition(code)) {
        // Logical Majoranas sit on the chain ends: gamma^L = gamma_0, gamma~^L = gamma~_{n-1}.
        switch (g) {
            case LogicalGate::Braid:
                c.add(gates::braid(n - 1, n));
                break;
            case LogicalGate::Sf:
                c.add(gates::braid(n - 1, 0));
                break;
            case LogicalGate::Tf:
                c.add(gates::braid_theta(n - 1, 0, Angle::pi_fraction(1, 4)));
                break;
            case LogicalGate::Zf:
                c.add(gates::braid(n - 1, 0)).add(gates::braid(n - 1, 0));
                break;
            case LogicalGate::CZf: {
                Circuit va = edge_move(code), vb = shift_fermions(edge_move(code), n);
                c.append(va).append(vb);
                c.add(gates::czf(n - 1, 2 * n - 1));
                c.append(vb.inverse()).append(va.inverse());
                break;
            }
            case LogicalGate::CZqf: {
                Circuit v = edge_move(code);
                c.append(v);
                c.add(gates::czqf(0, n - 1));
                c.append(v.inverse());
                break;
            }
        }
        return c;
    }
    // When gamma~^L carries the opposite phase to gamma^L, per-site daggers give the
    // logical gate with the right orientation.
    const bool aligned = code.logical_gamma.phase() == code.logical_gamma_tilde.phase();
    switch (g) {
        case LogicalGate::Braid:
            for (uint32_t i = 0; i < n; i++) c.add(aligned ? gates::braid(i, n + i) : gates::braid_dag(i, n + i));
            break;
        case LogicalGate::CZf:
            for (uint32_t i = 0; i < n; i++) c.add(gates::czf(i, n + i));
            break;
        case LogicalGate::Sf:
            for (uint32_t i = 0; i < n; i++) c.add(aligned ? gates::sf(i) : gates::sf_dag(i));
            break;
        case LogicalGate::Zf:
            for (uint32_t i = 0; i < n; i++) c.add(gates::zf(i));
            break;
        default:
            break;
    }
    if (g == LogicalGate::Braid || g == LogicalGate::CZf || g == LogicalGate::Sf || g == LogicalGate::Zf) {
        c.append(frame_fix(blocks_of(code, p.blocks), c));
        return c;
    }
    switch (g) {
        case LogicalGate::CZqf:
            c.append(controlled_parity(code, 0));
            break;
        case LogicalGate::Tf: {
            // Copy n_L onto the ancilla, T it there, uncopy.
            Circuit copy(p.registers);
            copy.add(gates::h(0)).append(controlled_parity(code, 0)).add(gates::h(0));
            c.append(copy).add(gates::t(0)).append(copy);
            break;
        }
        default:
            break;
    }
    return c;
}

bool LogicalReport::ok() const {
    for (const auto &c : checks)
        if (!c.ok) return false;
    return !checks.empty();
}

nlohmann::json LogicalReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto &c : checks) cs.push_back({{"check", c.what}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"code", code}, {"sites", n_sites}, {"gate", gate}, {"symbolic", symbolic}, {"ok", ok()}, {"checks", cs}};
}

LogicalReport verify_logical(const StabilizerCode &code, LogicalGate g) {
    LogicalReport r;
    r.code = code.name;
    r.n_sites = code.n_sites;
    r.gate = logical_gate_name(g);
    LogicalPlacement p = logical_placement(code, g);
    auto blocks = blocks_of(code, p.blocks);
    auto gens = all_generators(blocks);
    Circuit c = logical_circuit(code, g);
    Gate bare = bare_gate(g);

    auto single = [](const OperatorSum &s) -> std::optional<MQS> { return s.as_string(1e-12); };

    for (const MQS &gen : gens) {
        LogicalCheck chk{"stabilizer " + gen.str(), false, ""};
        try {
            auto img = single(conjugate_circuit(c, gen));
            if (!img) {
                chk.detail = "image is not a single string";
            } else {
                GroupMembership m = group_membership(gens, *img);
                chk.ok = m.in_group && m.phase == Phase::one();
                chk.detail = img->str() + (m.in_group ? " in group with phase " + m.phase.str() : " outside the group");
            }
        } catch (const SymbolicError &e) {
            chk.detail = e.what();
        }
        r.checks.push_back(chk);
    }
    if (!is_clifford(bare)) {
        r.symbolic = false;
        return r;
    }
    std::vector<MQS> ops;
    for (uint32_t f = 0; f < p.blocks; f++) {
        ops.push_back(MQS::gamma(f));
        ops.push_back(MQS::gamma_tilde(f));
    }
    for (uint32_t q = 0; q < p.data_qubits; q++) {
        ops.push_back(MQS::pauli(q, PauliLetter::X));
        ops.push_back(MQS::pauli(q, PauliLetter::Z));
    }
    for (const MQS &o : ops) {
        LogicalCheck chk{"logical " + o.str(), false, ""};
        auto want_bare = single(conjugate(bare, o));
        auto img = single(conjugate_circuit(c, lift(o, blocks)));
        if (!want_bare || !img) {
            chk.detail = "image is not a single string";
        } else {
            MQS want = lift(*want_bare, blocks);
            GroupMembership m = group_membership(gens, want.adjoint() * *img);
            chk.ok = m.in_group && m.phase == Phase::one();
            chk.detail = "bare " + want_bare->str() + "; got " + img->str() +
                         (m.in_group ? ", ratio phase " + m.phase.str() : ", not equivalent");
        }
        r.checks.push_back(chk);
    }
    return r;
}

std::optional<Phase> transversal_czf_phase(const StabilizerCode &code) {
    const uint32_t n = code.n_sites;
    auto blocks = blocks_of(code, 2);
    Circuit c = Circuit::fermions(2 * n);
    for (uint32_t i = 0; i < n; i++) c.add(gates::czf(i, n + i));
    auto img = conjugate_circuit(c, blocks[0].logical_gamma).as_string(1e-12);
    if (!img) return std::nullopt;
    MQS l = blocks[0].logical_gamma * blocks[1].logical_gamma_tilde * blocks[1].logical_gamma;
    GroupMembership m = group_membership(all_generators(blocks), l.adjoint() * *img);
    if (!m.in_group) return std::nullopt;
    return m.phase;
}

std::vector<StateVector> encoded_basis(const StabilizerCode &code, const LogicalPlacement &p) {
    auto blocks = blocks_of(code, p.blocks);
    Layout layout = Layout::from(p.registers);
    Layout bare = Layout::from(p.bare);
    // Joint |0...0>_L: project onto every block's +1 space with n_L = 0.
    StabilizerCode joint = blocks[0];
    for (size_t b = 1; b < blocks.size(); b++)
        joint.generators.insert(joint.generators.end(), blocks[b].generators.begin(), blocks[b].generators.end());
    StateVector zero;
    bool found = false;
    const uint32_t nf = layout.fermions();
    for (uint64_t bits = 0; bits < (uint64_t{1} << std::min<uint32_t>(nf, 24)) && !found; bits++) {
        Occupation occ;
        occ.fermions.assign(nf, 0);
        for (uint32_t f = 0; f < nf; f++) occ.fermions[f] = (bits >> f) & 1;
        StateVector s = project_codespace(joint, StateVector::basis_state(layout, occ));
        for (const auto &b : blocks) s = apply_operator(s, OperatorSum::identity() - b.logical_number());
        if (s.norm() > 1e-6) {
            s.normalize();
            s.prune();
            zero = s;
            found = true;
        }
    }
    if (!found) throw std::logic_error("joint codespace is empty");
    std::vector<StateVector> out;
    for (BasisIndex i = 0; i < static_cast<BasisIndex>(bare.dimension()); i++) {
        Occupation occ = bare.decode(i);
        StateVector s = zero;
        for (uint32_t q = 0; q < p.data_qubits; q++)
            if (occ.qubits[q]) s = apply_gate(s, gates::x(q));
        for (uint32_t f = 0; f < p.blocks; f++)
            if (occ.fermions[f]) s = apply_operator(s, blocks[f].logical_creation());
        s.prune();
        out.push_back(s);
    }
    return out;
}

RoundTrip round_trip(const StabilizerCode &code, LogicalGate g) {
    LogicalPlacement p = logical_placement(code, g);
    Layout bare = Layout::from(p.bare);
    Circuit c = logical_circuit(code, g);
    Gate bg = bare_gate(g);
    auto enc = encoded_basis(code, p);
    const size_t d = enc.size();
    Eigen::MatrixXcd m(d, d), want(d, d);
    RoundTrip rt;
    for (size_t j = 0; j < d; j++) {
        StateVector bj = StateVector::basis_state(bare, bare.decode(static_cast<BasisIndex>(j)));
        StateVector gj = apply_gate(bj, bg);
        StateVector uj = apply_circuit(enc[j], c);
        double kept = 0;
        for (size_t i = 0; i < d; i++) {
            StateVector bi = StateVector::basis_state(bare, bare.decode(static_cast<BasisIndex>(i)));
            want(i, j) = bi.inner(gj);
            m(i, j) = enc[i].inner(uj);
            kept += std::norm(m(i, j));
        }
        rt.leakage = std::max(rt.leakage, std::abs(uj.norm_squared() - kept));
    }
    cplx t = (want.adjoint() * m).trace();
    cplx ph = std::abs(t) > 0 ? t / std::abs(t) : cplx(1);
    rt.deviation = (m - ph * want).cwiseAbs().maxCoeff();
    return rt;
}

}  // namespace fqc
