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

#ifndef FQC_CODES_MEMORY_H
#define FQC_CODES_MEMORY_H

#include <cstdint>

#include "fqc/codes/stabilizer_code.h"
#include "json.hpp"

namespace fqc {

/// Per site and round: Zf with probability phase_rate; a random single Majorana
/// (gamma or gamma~, even odds) with probability loss_rate.
struct ErrorModel {
    double phase_rate = 0;
    double loss_rate = 0;
};

struct MemoryConfig {
    uint32_t rounds = 1;
    uint64_t shots = 1000;
    uint64_t seed = 0;
    /// Shots are split into this many shards, each with its own derived seed.
    uint32_t shards = 8;
};

struct MemoryResult {
    uint64_t shots = 0;
    uint64_t failures = 0;
    uint64_t detected = 0;      // shots with a nontrivial syndrome in some round
    uint64_t undecodable = 0;   // shots where the decoder had no answer
    double rate = 0;
    double ci_low = 0;          // Wilson 95%
    double ci_high = 0;
    nlohmann::json to_json() const;
};

/// Errors are tracked as Majorana strings; each round the syndrome is read from
/// commutation with the generators and the decoder's correction is multiplied in.
/// A shot fails when the residual anticommutes with either logical Majorana.
MemoryResult memory_experiment(const StabilizerCode &code, const ErrorModel &model, const MemoryConfig &cfg);

/// Closed form for one round of phase errors on the repetition code with the chain
/// decoder: the chance that more than half the sites flip (ties counted by the rule).
double repetition_failure_probability(uint32_t n, double p);

}  // namespace fqc

#endif
