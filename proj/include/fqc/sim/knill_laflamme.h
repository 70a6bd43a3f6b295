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

#ifndef FQC_SIM_KNILL_LAFLAMME_H
#define FQC_SIM_KNILL_LAFLAMME_H

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fqc/majorana/operator_sum.h"
#include "fqc/sim/state_vector.h"

namespace fqc {

struct KLReport {
    std::string label;
    Eigen::MatrixXcd pep;  // <c_a|E|c_b>
    cplx lambda;           // best multiple of the identity, tr(PEP)/k
    double deviation;      // Frobenius norm of PEP - lambda*1
    bool detectable;
    nlohmann::json to_json() const;
};

struct LabelledError {
    std::string label;
    OperatorSum op;
};

/// Throws if the codewords are not orthonormal within 1e-9.
void check_orthonormal(const std::vector<StateVector> &codewords);

std::vector<KLReport> kl_check(const std::vector<StateVector> &codewords, const std::vector<LabelledError> &errors);
KLReport kl_check(const std::vector<StateVector> &codewords, const LabelledError &error);

/// Total-number behaviour of a code: whether every codeword is a number eigenstate and whether they share it.
struct NumberReport {
    std::vector<double> mean;
    std::vector<double> variance;
    bool eigenstates;
    bool same_eigenvalue;
};
NumberReport number_check(const std::vector<StateVector> &codewords);

}  // namespace fqc

#endif
