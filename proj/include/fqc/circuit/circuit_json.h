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

#ifndef FQC_CIRCUIT_CIRCUIT_JSON_H
#define FQC_CIRCUIT_CIRCUIT_JSON_H

#include "fqc/circuit/circuit.h"
#include "json.hpp"

namespace fqc {

nlohmann::json to_json(const Gate &g);
Gate gate_from_json(const nlohmann::json &j);
nlohmann::json to_json(const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &j);

}  // namespace fqc

#endif
