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

#ifndef FQC_CIRCUIT_CONJUGATE_H
#define FQC_CIRCUIT_CONJUGATE_H

#include <optional>
#include <stdexcept>

#include "fqc/circuit/circuit.h"
#include "fqc/majorana/operator_sum.h"

namespace fqc {

class SymbolicError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ConjugationOptions {
    /// Negative control: flips the sign of every image produced by this gate kind.
    std::optional<GateKind> corrupt_kind;
};

bool supports_symbolic(const Gate &g);

/// U^dagger s U for a single gate.
OperatorSum conjugate(const Gate &g, const MajoranaQubitString &s, const ConjugationOptions &opt = {});
OperatorSum conjugate(const Gate &g, const OperatorSum &s, const ConjugationOptions &opt = {});
/// U^dagger s U for a whole circuit, folding gates from last to first.
OperatorSum conjugate_circuit(const Circuit &c, const MajoranaQubitString &s, const ConjugationOptions &opt = {});
OperatorSum conjugate_circuit(const Circuit &c, const OperatorSum &s, const ConjugationOptions &opt = {});

}  // namespace fqc

#endif
