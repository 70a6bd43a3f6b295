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

#ifndef FQC_MAJORANA_OPERATOR_SUM_H
#define FQC_MAJORANA_OPERATOR_SUM_H

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqc/majorana/majorana_string.h"

namespace fqc {

using cplx = std::complex<double>;

/// Linear combination of Majorana-qubit strings. Keys are stored with phase +1; phases live in the coefficients.
class OperatorSum {
   public:
    OperatorSum() = default;
    OperatorSum(const MajoranaQubitString &s);  // NOLINT: implicit promotion is convenient.
    OperatorSum(cplx c, const MajoranaQubitString &s);
    static OperatorSum identity(cplx c = 1.0);

    void add(cplx c, const MajoranaQubitString &s);
    OperatorSum &operator+=(const OperatorSum &o);
    OperatorSum &operator-=(const OperatorSum &o);
    OperatorSum &operator*=(cplx c);
    OperatorSum adjoint() const;
    /// Drops terms with |c| < tol.
    void prune(double tol = 1e-14);

    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::map<MajoranaQubitString, cplx> &terms() const { return terms_; }
    cplx coefficient(const MajoranaQubitString &s) const;
    /// Single string with a fourth-root coefficient, when that is what this sum is.
    std::optional<MajoranaQubitString> as_string(double tol = 1e-12) const;
    double max_abs_difference(const OperatorSum &o) const;
    bool approx_equal(const OperatorSum &o, double tol = 1e-10) const { return max_abs_difference(o) < tol; }
    uint32_t n_sites() const;
    uint32_t n_qubits() const;

    std::string str() const;

    friend OperatorSum operator*(const OperatorSum &a, const OperatorSum &b);
    friend OperatorSum operator+(OperatorSum a, const OperatorSum &b) { return a += b; }
    friend OperatorSum operator-(OperatorSum a, const OperatorSum &b) { return a -= b; }
    friend OperatorSum operator*(cplx c, OperatorSum a) { return a *= c; }

   private:
    std::map<MajoranaQubitString, cplx> terms_;
};

}  // namespace fqc

#endif
