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

#ifndef FQC_CIRCUIT_RESOURCES_H
#define FQC_CIRCUIT_RESOURCES_H

#include <functional>
#include <map>
#include <string>

#include "fqc/circuit/circuit.h"
#include "json.hpp"

namespace fqc {

struct ResourceOptions {
    /// Decides which gates count as Clifford; defaults to is_clifford.
    std::function<bool(const Gate &)> clifford = is_clifford;
    /// When true, a move-swap occupies a layer on both modes.
    bool swaps_cost_depth = false;
};

struct ResourceReport {
    std::map<std::string, size_t> counts;
    size_t gates = 0;
    size_t cliffords = 0;
    size_t rotations = 0;
    size_t braids = 0;
    size_t single_fermion = 0;
    size_t two_qubit = 0;
    size_t measurements = 0;
    size_t swaps = 0;
    /// ASAP layering where ops on disjoint registers share a layer.
    size_t depth = 0;
    /// Layers counted only for non-Clifford gates.
    size_t rotation_depth = 0;

    nlohmann::json to_json() const;
};

ResourceReport count_resources(const Circuit &c, const ResourceOptions &opt = {});

}  // namespace fqc

#endif
