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

#include "fqc/majorana/operator_sum.h"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace fqc {

namespace {
constexpr double kZero = 1e-14;
}

OperatorSum::OperatorSum(const MajoranaQubitString &s) { add(1.0, s); }

OperatorSum::OperatorSum(cplx c, const MajoranaQubitString &s) { add(c, s); }

OperatorSum OperatorSum::identity(cplx c) { return OperatorSum(c, MajoranaQubitString()); }

void OperatorSum::add(cplx c, const MajoranaQubitString &s) {
    cplx v = c * s.phase().value();
    if (v == cplx(0)) {
        return;
    }
    auto key = s.unphased();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), v);
        return;
    }
    it->second += v;
    if (std::abs(it->second) < kZero) {
        terms_.erase(it);
    }
}

OperatorSum &OperatorSum::operator+=(const OperatorSum &o) {
    for (const auto &[s, c] : o.terms_) {
        add(c, s);
    }
    return *this;
}

OperatorSum &OperatorSum::operator-=(const OperatorSum &o) {
    for (const auto &[s, c] : o.terms_) {
        add(-c, s);
    }
    return *this;
}

OperatorSum &OperatorSum::operator*=(cplx c) {
    for (auto &[s, v] : terms_) {
        v *= c;
    }
    prune();
    return *this;
}

OperatorSum OperatorSum::adjoint() const {
    OperatorSum out;
    for (const auto &[s, c] : terms_) {
        out.add(std::conj(c), s.adjoint());
    }
    return out;
}

void OperatorSum::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < tol) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

cplx OperatorSum::coefficient(const MajoranaQubitString &s) const {
    auto it = terms_.find(s.unphased());
    return it == terms_.end() ? cplx(0) : it->second * s.phase().conj().value();
}

std::optional<MajoranaQubitString> OperatorSum::as_string(double tol) const {
    if (terms_.size() != 1) {
        return std::nullopt;
    }
    const auto &[s, c] = *terms_.begin();
    for (int k = 0; k < 4; k++) {
        Phase p = Phase::from_power(k);
        if (std::abs(c - p.value()) < tol) {
            return s.with_phase(p);
        }
    }
    return std::nullopt;
}

double OperatorSum::max_abs_difference(const OperatorSum &o) const {
    double worst = 0;
    for (const auto &[s, c] : terms_) {
        worst = std::max(worst, std::abs(c - o.coefficient(s)));
    }
    for (const auto &[s, c] : o.terms_) {
        worst = std::max(worst, std::abs(c - coefficient(s)));
    }
    return worst;
}

uint32_t OperatorSum::n_sites() const {
    uint32_t n = 0;
    for (const auto &[s, c] : terms_) {
        n = std::max(n, s.max_site_plus_one());
    }
    return n;
}

uint32_t OperatorSum::n_qubits() const {
    uint32_t n = 0;
    for (const auto &[s, c] : terms_) {
        n = std::max(n, s.max_qubit_plus_one());
    }
    return n;
}

std::string OperatorSum::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    out << std::setprecision(12);
    bool first = true;
    for (const auto &[s, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i) [" << s.str() << ']';
    }
    return out.str();
}

OperatorSum operator*(const OperatorSum &a, const OperatorSum &b) {
    OperatorSum out;
    for (const auto &[sa, ca] : a.terms_) {
        for (const auto &[sb, cb] : b.terms_) {
            out.add(ca * cb, sa * sb);
        }
    }
    return out;
}

}  // namespace fqc
