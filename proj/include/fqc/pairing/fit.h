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

#ifndef FQC_PAIRING_FIT_H
#define FQC_PAIRING_FIT_H

#include <vector>

#include "json.hpp"

namespace fqc {

/// Least-squares fit of p(theta) = 1/2 + (C cos(theta) - D)/2, unweighted.
struct FringeFit {
    double contrast = 0;
    double offset = 0;
    /// Root-mean-square deviation of the data from the fitted curve.
    double residual = 0;
    /// Standard errors from the residual variance; zero when the data is exact.
    double contrast_err = 0;
    double offset_err = 0;

    nlohmann::json to_json() const;
};

FringeFit fit_fringe(const std::vector<double> &theta, const std::vector<double> &p);

/// y = a x^k fitted on log-log axes.
struct PowerLaw {
    double exponent = 0;
    double prefactor = 0;
    double exponent_err = 0;
    double residual = 0;

    nlohmann::json to_json() const;
};

PowerLaw fit_power_law(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace fqc

#endif
