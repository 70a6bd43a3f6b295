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

#ifndef FQC_CIRCUIT_CIRCUIT_H
#define FQC_CIRCUIT_CIRCUIT_H

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fqc/circuit/gate.h"

namespace fqc {

struct Registers {
    uint32_t qubits = 0;
    uint32_t fermions = 0;
    std::vector<uint32_t> boson_cutoffs;

    uint32_t bosons() const { return static_cast<uint32_t>(boson_cutoffs.size()); }
    bool contains(const Target &t) const;
    bool operator==(const Registers &) const = default;
};

/// Qubits are measured in Z, fermion modes in the occupation basis. Outcome 1 means |1> / occupied.
struct Measure {
    Target target;
    std::string record;
};

/// Applies `gate` when every listed record holds the given outcome.
struct Conditioned {
    std::vector<std::pair<std::string, int>> when;
    Gate gate;
};

struct Reset {
    Target target;
};

/// Fermionic exchange of two modes, realized physically by moving atoms.
struct MoveSwap {
    uint32_t a = 0;
    uint32_t b = 0;
};

using Op = std::variant<Gate, Measure, Conditioned, Reset, MoveSwap>;

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(Registers r) : registers(std::move(r)) {}
    static Circuit fermions(uint32_t n) { return Circuit(Registers{0, n, {}}); }

    Circuit &add(const Gate &g);
    Circuit &add(const std::vector<Gate> &gs);
    Circuit &measure(Target t, std::string record);
    Circuit &conditioned(std::vector<std::pair<std::string, int>> when, const Gate &g);
    Circuit &reset(Target t);
    Circuit &move_swap(uint32_t a, uint32_t b);
    /// Appends ops of `other`; registers grow to cover both.
    Circuit &append(const Circuit &other);

    /// U^dagger as a circuit. Throws if the circuit contains non-unitary ops.
    Circuit inverse() const;
    bool is_unitary() const;
    std::vector<Gate> gates() const;
    /// Throws std::invalid_argument on out-of-range targets or undefined records.
    void validate() const;

    Registers registers;
    std::vector<Op> ops;
};

}  // namespace fqc

#endif
