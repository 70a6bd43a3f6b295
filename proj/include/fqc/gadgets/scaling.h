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


#ifndef FQC_GADGETS_SCALING_H
#define FQC_GADGETS_SCALING_H

#include <string>
#include <vector>

#include "json.hpp"

namespace fqc {

enum class ScalingModel { Linear, Quadratic, Log, NLogN };
std::string scaling_model_name(ScalingModel m);
double scaling_model_value(ScalingModel m, double n);

/// Least-squares y ~ c f(N). `residual` is the RMS error relative to the mean of y.
struct ScalingFit {
    std::string method;
    std::string metric;
    ScalingModel model = ScalingModel::Linear;
    double constant = 0;
    double residual = 0;
    bool best = false;

    nlohmann::json to_json() const;
};

ScalingFit fit_scaling(ScalingModel m, const std::vector<double> &ns, const std::vector<double> &ys);

struct ResourceRow {
    std::string method;
    uint32_t n = 0;
    size_t depth = 0;
    size_t cliffords = 0;
    size_t rotations = 0;
    size_t swaps = 0;
};

struct ResourceTable {
    std::vector<ResourceRow> rows;
    std::vector<ScalingFit> fits;

    const ScalingFit &best(const std::string &method, const std::string &metric) const;
    const ScalingFit &fit(const std::string &method, const std::string &metric, ScalingModel m) const;
    /// method,N,depth,cliffords,rotations,swaps
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

/// Counts for fswap_network, qubit_fft (shuffle routing), qubit_fft_local and
/// fermion_ffft at every N, and all four
/// model fits of depth and Clifford count per method. Throws on fewer than two
/// sizes or a size that is not a power of two.
ResourceTable resource_table(const std::vector<uint32_t> &ns);

}  // namespace fqc

#endif
