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

#ifndef FQC_CIRCUIT_GATE_H
#define FQC_CIRCUIT_GATE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqc/circuit/angle.h"

namespace fqc {

enum class RegisterKind : uint8_t { Qubit, Fermion, Boson };

struct Target {
    RegisterKind kind = RegisterKind::Fermion;
    uint32_t index = 0;
    bool operator==(const Target &) const = default;
    auto operator<=>(const Target &) const = default;
    /// "q3", "f0", "b1"
    std::string str() const;
    static Target parse(std::string_view text);
};

inline Target qubit(uint32_t i) { return {RegisterKind::Qubit, i}; }
inline Target fermion(uint32_t i) { return {RegisterKind::Fermion, i}; }
inline Target boson(uint32_t i) { return {RegisterKind::Boson, i}; }

enum class GateKind : uint8_t {
    // single fermion mode
    Tf,        // exp(i pi/4 n)
    TfDag,     // exp(-i pi/4 n)
    Sf,        // exp(i pi/2 n)
    SfDag,     // exp(-i pi/2 n)
    Zf,        // exp(i pi n)
    PhaseF,    // exp(-i theta n)
    // single qubit
    H,
    S,
    Sdg,
    X,
    Z,
    T,
    Tdg,
    PhaseQ,    // exp(-i theta n^q)
    Xrot,      // exp(-i theta/2 X)
    // two qubits
    CNOT,
    CZ,
    SWAP,
    XXq,       // exp(i pi/4 X X)
    // two fermion modes
    Braid,       // exp(-pi/4 gt_i g_j)
    BraidDag,    // exp(+pi/4 gt_i g_j)
    BraidTheta,  // exp(-theta/2 gt_i g_j)
    CZf,         // exp(i pi n_i n_j)
    CZfTheta,    // exp(-i theta n_i n_j)
    SqrtISwapF,  // exp(i pi/4 (p_i^+ p_j + h.c.))
    UTDown,      // exp(-i theta (p_i^+ p_j + h.c.))
    UUpDown,     // same generator, intra-site spin flip
    PairIdeal,   // exp(i pi/4 (e^{i phi} p_i^+ p_j^+ + h.c.))
    // qubit then fermion
    CZqf,        // exp(i pi n^q n)
    CZqfTheta,   // exp(-i theta n^q n)
    // bosons
    BS,          // exp(theta (b_A^+ b_B - h.c.))
    UDiss,       // exp(-i pi/(4 sqrt N) (e^{i phi} b p_i^+ p_j^+ + h.c.)); targets boson, fermion, fermion
    Pair,        // exp(+i pi/(4 sqrt N) (e^{i phi} b p_i^+ p_j^+ + h.c.)); targets boson, fermion, fermion
};

struct GateInfo {
    const char *name;
    std::vector<RegisterKind> signature;
    bool has_angle;
    bool has_molecules;
};

const GateInfo &gate_info(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
const std::vector<GateKind> &all_gate_kinds();

/// One gate application. `angle` is theta for rotation kinds and phi for the pairing kinds.
struct Gate {
    GateKind kind = GateKind::Zf;
    std::vector<uint32_t> targets;
    Angle angle;
    double molecules = 0;

    Target target(size_t k) const;
    std::vector<Target> typed_targets() const;
    std::string name() const { return gate_info(kind).name; }
    std::string str() const;
    bool operator==(const Gate &o) const;
};

/// Throws std::invalid_argument on arity or repeated targets.
void validate(const Gate &g);

bool is_clifford(const Gate &g);
bool is_single_fermion(const Gate &g);
bool is_braid_class(const Gate &g);
bool touches_boson(const Gate &g);
/// Gates realizing g^dagger, in time order.
std::vector<Gate> inverse(const Gate &g);

namespace gates {
Gate tf(uint32_t f);
Gate tf_dag(uint32_t f);
Gate sf(uint32_t f);
Gate sf_dag(uint32_t f);
Gate zf(uint32_t f);
Gate phase_f(uint32_t f, Angle theta);
Gate h(uint32_t q);
Gate s(uint32_t q);
Gate sdg(uint32_t q);
Gate x(uint32_t q);
Gate z(uint32_t q);
Gate t(uint32_t q);
Gate tdg(uint32_t q);
Gate phase_q(uint32_t q, Angle theta);
Gate xrot(uint32_t q, Angle theta);
Gate cnot(uint32_t c, uint32_t t);
Gate cz(uint32_t a, uint32_t b);
Gate swap(uint32_t a, uint32_t b);
Gate xxq(uint32_t a, uint32_t b);
Gate braid(uint32_t i, uint32_t j);
Gate braid_dag(uint32_t i, uint32_t j);
Gate braid_theta(uint32_t i, uint32_t j, Angle theta);
Gate czf(uint32_t i, uint32_t j);
Gate czf_theta(uint32_t i, uint32_t j, Angle theta);
Gate sqrt_iswap_f(uint32_t i, uint32_t j);
Gate u_tdown(uint32_t i, uint32_t j, Angle theta);
Gate u_updown(uint32_t up, uint32_t down, Angle theta);
Gate pair_ideal(uint32_t i, uint32_t j, Angle phi = {});
Gate czqf(uint32_t q, uint32_t f);
Gate czqf_theta(uint32_t q, uint32_t f, Angle theta);
Gate bs(uint32_t a, uint32_t b, Angle theta);
Gate u_diss(uint32_t b, uint32_t up, uint32_t down, double n, Angle phi = {});
Gate pair(uint32_t b, uint32_t i, uint32_t j, double n, Angle phi = {});
}  // namespace gates

}  // namespace fqc

#endif
