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

#ifndef FQC_CODES_LOGICAL_GATES_H
#define FQC_CODES_LOGICAL_GATES_H

#include <optional>
#include <string>
#include <vector>

#include "fqc/circuit/circuit.h"
#include "fqc/codes/stabilizer_code.h"
#include "fqc/sim/state_vector.h"
#include "json.hpp"

namespace fqc {

enum class LogicalGate { Braid, CZf, CZqf, Sf, Tf, Zf };

std::string logical_gate_name(LogicalGate g);
LogicalGate logical_gate_from_name(const std::string &name);
const std::vector<LogicalGate> &all_logical_gates();

/// Register placement used by every logical circuit:
///   block a on fermions [0, n), block b on [n, 2n) for two-block gates,
///   the bare control qubit of CZqf is qubit 0,
///   the colour-code T gadget uses ancilla qubit 0 (returned to |0>).
struct LogicalPlacement {
    uint32_t blocks = 1;
    uint32_t data_qubits = 0;
    uint32_t ancilla_qubits = 0;
    Registers registers;  // encoded side
    Registers bare;       // one mode per block
};
LogicalPlacement logical_placement(const StabilizerCode &code, LogicalGate g);

/// Physical gate on the bare registers that the logical circuit should reproduce.
Gate bare_gate(LogicalGate g);

Circuit logical_circuit(const StabilizerCode &code, LogicalGate g);

/// Shifts every fermion target of a circuit by `offset`.
Circuit shift_fermions(const Circuit &c, uint32_t offset);

struct LogicalCheck {
    std::string what;
    bool ok = false;
    std::string detail;
};

struct LogicalReport {
    std::string code;
    uint32_t n_sites = 0;
    std::string gate;
    bool symbolic = true;  // false when the circuit is not Clifford
    std::vector<LogicalCheck> checks;

    bool ok() const;
    nlohmann::json to_json() const;
};

/// Stabilizers must map into the stabilizer group with phase +1 and the logical
/// Majoranas (and the control qubit's Paulis) must transform like the bare gate
/// transforms the bare operators, phases included, modulo stabilizers.
LogicalReport verify_logical(const StabilizerCode &code, LogicalGate g);

/// lambda in  gamma^L_a -> lambda gamma^L_a gamma~^L_b gamma^L_b  under transversal CZf.
std::optional<Phase> transversal_czf_phase(const StabilizerCode &code);

/// Encoded basis states for the placement: bare basis index -> codeword.
/// Qubit bits are copied, ancilla qubits start in |0>, fermion occupations x_a, x_b
/// become c_b^dag^x_b c_a^dag^x_a |0_a 0_b>_L.
std::vector<StateVector> encoded_basis(const StabilizerCode &code, const LogicalPlacement &p);

struct RoundTrip {
    double deviation = 0;  // max abs after removing the global phase
    double leakage = 0;    // weight that left the codespace
    nlohmann::json to_json() const { return {{"deviation", deviation}, {"leakage", leakage}}; }
};

/// Encode the bare basis, run the logical circuit, project back onto the encoded
/// basis and compare with the bare gate matrix.
RoundTrip round_trip(const StabilizerCode &code, LogicalGate g);

}  // namespace fqc

#endif
