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

#include "fqc/circuit/angle.h"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fqc {

Angle Angle::radians(double r) {
    if (!std::isfinite(r)) {
        throw std::invalid_argument("angle must be finite");
    }
    Angle a;
    a.frac_.reset();
    a.rad_ = r;
    if (r == 0) {
        a.frac_ = std::make_pair<int64_t, int64_t>(0, 1);
    }
    return a;
}

Angle Angle::pi_fraction(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num, den);
    if (g == 0) {
        g = 1;
    }
    Angle a;
    a.frac_ = std::make_pair(num / g, den / g);
    a.rad_ = M_PI * static_cast<double>(num / g) / static_cast<double>(den / g);
    return a;
}

double Angle::radians() const { return rad_; }

bool Angle::is_multiple_of_pi(int64_t num, int64_t den) const {
    if (!frac_) {
        return false;
    }
    // (a/b) / (num/den) = a*den / (b*num) must be an integer.
    __int128 top = static_cast<__int128>(frac_->first) * den;
    __int128 bottom = static_cast<__int128>(frac_->second) * num;
    if (bottom == 0) {
        return top == 0;
    }
    return top % bottom == 0;
}

bool Angle::is_zero() const { return frac_ ? frac_->first == 0 : rad_ == 0; }

Angle Angle::operator-() const {
    if (frac_) {
        return pi_fraction(-frac_->first, frac_->second);
    }
    return radians(-rad_);
}

Angle Angle::operator+(const Angle &o) const {
    if (frac_ && o.frac_) {
        return pi_fraction(frac_->first * o.frac_->second + o.frac_->first * frac_->second,
                           frac_->second * o.frac_->second);
    }
    return radians(rad_ + o.rad_);
}

Angle Angle::operator*(int64_t k) const {
    if (frac_) {
        return pi_fraction(frac_->first * k, frac_->second);
    }
    return radians(rad_ * static_cast<double>(k));
}

bool Angle::operator==(const Angle &o) const {
    if (frac_ && o.frac_) {
        return *frac_ == *o.frac_;
    }
    return !frac_ && !o.frac_ && rad_ == o.rad_;
}

std::string Angle::str() const {
    if (frac_) {
        auto [n, d] = *frac_;
        if (n == 0) {
            return "0";
        }
        std::string s = n < 0 ? "-pi" : "pi";
        int64_t a = n < 0 ? -n : n;
        if (a != 1) {
            s += "*" + std::to_string(a);
        }
        if (d != 1) {
            s += "/" + std::to_string(d);
        }
        return s;
    }
    std::ostringstream out;
    out << std::setprecision(17) << rad_;
    return out.str();
}

Angle Angle::parse(const std::string &text) {
    std::string t = text;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    if (t.rfind("pi", 0) == 0) {
        int64_t num = 1;
        int64_t den = 1;
        std::string rest = t.substr(2);
        if (!rest.empty() && rest[0] == '*') {
            size_t used = 0;
            num = std::stoll(rest.substr(1), &used);
            rest = rest.substr(1 + used);
        }
        if (!rest.empty() && rest[0] == '/') {
            size_t used = 0;
            den = std::stoll(rest.substr(1), &used);
            rest = rest.substr(1 + used);
        }
        if (!rest.empty()) {
            throw std::invalid_argument("bad angle '" + text + "'");
        }
        return pi_fraction(neg ? -num : num, den);
    }
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("bad angle '" + text + "'");
    }
    return radians(v);
}

}  // namespace fqc
