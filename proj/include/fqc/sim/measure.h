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

#ifndef FQC_SIM_MEASURE_H
#define FQC_SIM_MEASURE_H

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "fqc/circuit/circuit.h"
#include "fqc/sim/apply_gate.h"
#include "fqc/sim/state_vector.h"

namespace fqc {

/// Seeded generator. Independent streams come from hashing (seed, stream) with SplitMix64.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}
    static uint64_t derive(uint64_t seed, uint64_t stream);
    static Rng stream(uint64_t seed, uint64_t stream) { return Rng(derive(seed, stream)); }
    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform();
    uint64_t next() { return engine_(); }

   private:
    std::mt19937_64 engine_;
};

/// Probability that a qubit reads 1 or a fermion mode is occupied (outcome = 1), or the complement.
double probability(const StateVector &s, Target t, int outcome);

struct Branch {
    double probability;
    StateVector state;
};
/// Projects onto the outcome and renormalizes. Throws on a zero-probability branch.
Branch branch(const StateVector &s, Target t, int outcome);

struct MeasureResult {
    int outcome;
    StateVector state;
};
MeasureResult measure(const StateVector &s, Target t, Rng &rng);

struct RunResult {
    StateVector state;
    std::map<std::string, int> records;
    /// Product of branch probabilities for forced outcomes (1 when everything was sampled).
    double probability = 1;
};

/// Runs a circuit. Records listed in `forced` are projected instead of sampled.
RunResult run_circuit(const StateVector &s, const Circuit &c, Rng *rng = nullptr,
                      const std::map<std::string, int> &forced = {}, const SimOptions &opt = {});
/// Gates and move-swaps only.
StateVector apply_circuit(const StateVector &s, const Circuit &c, const SimOptions &opt = {});

}  // namespace fqc

#endif
