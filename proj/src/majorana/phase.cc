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

#include "fqc/majorana/phase.h"

#include <cmath>
#include <stdexcept>

namespace fqc {

std::complex<double> Phase::value() const {
    switch (k_) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

std::string Phase::str() const {
    static const char *names[] = {"+1", "+i", "-1", "-i"};
    return names[k_];
}

Phase Phase::parse(std::string_view text) {
    if (text == "+1" || text == "1") {
        return one();
    }
    if (text == "+i" || text == "i") {
        return i();
    }
    if (text == "-1") {
        return minus_one();
    }
    if (text == "-i") {
        return minus_i();
    }
    throw std::invalid_argument("bad phase token '" + std::string(text) + "'");
}

Phase Phase::from_complex(std::complex<double> z, double tol) {
    for (int k = 0; k < 4; k++) {
        if (std::abs(z - from_power(k).value()) < tol) {
            return from_power(k);
        }
    }
    throw std::invalid_argument("value is not a fourth root of unity");
}

}  // namespace fqc
