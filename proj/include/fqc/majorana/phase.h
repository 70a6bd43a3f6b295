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

#ifndef FQC_MAJORANA_PHASE_H
#define FQC_MAJORANA_PHASE_H

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace fqc {

/// A fourth root of unity, stored as the exponent k in i^k.
class Phase {
   public:
    constexpr Phase() = default;
    static constexpr Phase from_power(int k) {
        Phase p;
        p.k_ = static_cast<uint8_t>(((k % 4) + 4) % 4);
        return p;
    }
    static constexpr Phase one() { return from_power(0); }
    static constexpr Phase i() { return from_power(1); }
    static constexpr Phase minus_one() { return from_power(2); }
    static constexpr Phase minus_i() { return from_power(3); }
    static constexpr Phase sign(bool negative) { return from_power(negative ? 2 : 0); }

    constexpr int power() const { return k_; }
    constexpr bool is_real() const { return (k_ & 1) == 0; }
    constexpr Phase conj() const { return from_power(-static_cast<int>(k_)); }
    constexpr Phase operator*(Phase o) const { return from_power(k_ + o.k_); }
    constexpr Phase &operator*=(Phase o) { return *this = *this * o; }
    constexpr Phase operator-() const { return from_power(k_ + 2); }
    constexpr bool operator==(const Phase &) const = default;

    std::complex<double> value() const;
    /// "+1", "+i", "-1" or "-i".
    std::string str() const;
    static Phase parse(std::string_view text);
    /// Recovers an exact phase from a complex number; throws if it is not a fourth root of unity.
    static Phase from_complex(std::complex<double> z, double tol = 1e-9);

   private:
    uint8_t k_ = 0;
};

}  // namespace fqc

#endif
