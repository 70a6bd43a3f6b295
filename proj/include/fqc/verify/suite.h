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

#ifndef FQC_VERIFY_SUITE_H
#define FQC_VERIFY_SUITE_H

#include <optional>
#include <string>
#include <vector>

#include "fqc/circuit/gate.h"
#include "json.hpp"

namespace fqc {

struct Check {
    std::string group;
    std::string name;
    double deviation = 0;
    double tolerance = 0;
    bool passed = false;
    std::string detail;

    nlohmann::json to_json() const;
};

struct VerifyOptions {
    /// Negative control: the symbolic rule of this gate kind returns negated images.
    std::optional<GateKind> corrupt_kind;
    double tolerance = 1e-10;
    uint64_t seed = 0;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool ok() const;
    std::vector<std::string> failures() const;
    nlohmann::json to_json() const;
};

/// Conjugation rules against dense matrices, braid identities, error-detection conditions, syndrome
/// decoding, logical gates and the number-code no-go check. Dense matrices are built column by column
/// with the state-vector simulator, independent of the symbolic rules.
VerifyReport run_verify(const VerifyOptions &opt = {});

}  // namespace fqc

#endif
