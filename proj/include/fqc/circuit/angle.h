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

#ifndef FQC_CIRCUIT_ANGLE_H
#define FQC_CIRCUIT_ANGLE_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace fqc {

/// Rotation angle. Exact rational multiples of pi are kept as fractions so Clifford tests stay exact.
class Angle {
   public:
    Angle() = default;
    static Angle radians(double r);
    static Angle pi_fraction(int64_t num, int64_t den = 1);

    double radians() const;
    bool is_exact() const { return frac_.has_value(); }
    /// Reduced (num, den) with den > 0, when exact.
    std::optional<std::pair<int64_t, int64_t>> fraction() const { return frac_; }
    /// Exact test: angle = k * pi * num / den for some integer k.
    bool is_multiple_of_pi(int64_t num, int64_t den) const;
    bool is_zero() const;

    Angle operator-() const;
    Angle operator+(const Angle &o) const;
    Angle operator*(int64_t k) const;
    bool operator==(const Angle &o) const;

    /// "pi*3/4", "-pi/2", "0" or a decimal radian value.
    std::string str() const;
    static Angle parse(const std::string &text);

   private:
    std::optional<std::pair<int64_t, int64_t>> frac_ = std::make_pair<int64_t, int64_t>(0, 1);
    double rad_ = 0;
};

}  // namespace fqc

#endif
