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

#include "fqc/sim/knill_laflamme.h"

#include <cmath>
#include <stdexcept>

#include "fqc/sim/apply_string.h"

namespace fqc {

nlohmann::json KLReport::to_json() const {
    nlohmann::json m = nlohmann::json::array();
    for (Eigen::Index r = 0; r < pep.rows(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < pep.cols(); c++) {
            row.push_back({pep(r, c).real(), pep(r, c).imag()});
        }
        m.push_back(row);
    }
    return {{"error", label},
            {"pep", m},
            {"lambda", {lambda.real(), lambda.imag()}},
            {"deviation", deviation},
            {"verdict", detectable ? "detectable" : "not-detectable"}};
}

void check_orthonormal(const std::vector<StateVector> &codewords) {
    for (size_t a = 0; a < codewords.size(); a++) {
        for (size_t b = 0; b < codewords.size(); b++) {
            cplx g = codewords[a].inner(codewords[b]);
            if (std::abs(g - cplx(a == b ? 1 : 0)) > 1e-9) {
                throw std::invalid_argument("codewords are not orthonormal");
            }
        }
    }
}

KLReport kl_check(const std::vector<StateVector> &codewords, const LabelledError &error) {
    check_orthonormal(codewords);
    const size_t k = codewords.size();
    Eigen::MatrixXcd pep(k, k);
    std::vector<StateVector> images;
    for (const StateVector &c : codewords) {
        images.push_back(apply_operator(c, error.op));
    }
    for (size_t a = 0; a < k; a++) {
        for (size_t b = 0; b < k; b++) {
            pep(a, b) = codewords[a].inner(images[b]);
        }
    }
    cplx lambda = pep.trace() / static_cast<double>(k);
    double dev = (pep - lambda * Eigen::MatrixXcd::Identity(k, k)).norm();
    return {error.label, pep, lambda, dev, dev < 1e-9};
}

std::vector<KLReport> kl_check(const std::vector<StateVector> &codewords, const std::vector<LabelledError> &errors) {
    std::vector<KLReport> out;
    for (const auto &e : errors) {
        out.push_back(kl_check(codewords, e));
    }
    return out;
}

NumberReport number_check(const std::vector<StateVector> &codewords) {
    NumberReport r{{}, {}, true, true};
    for (const StateVector &c : codewords) {
        const Layout &l = c.layout();
        double m = 0, m2 = 0, norm = c.norm_squared();
        for (const auto &[i, a] : c.amplitudes()) {
            double n = l.fermion_number(i);
            m += std::norm(a) * n / norm;
            m2 += std::norm(a) * n * n / norm;
        }
        r.mean.push_back(m);
        r.variance.push_back(std::max(0.0, m2 - m * m));
        r.eigenstates = r.eigenstates && r.variance.back() < 1e-9;
    }
    for (double m : r.mean) {
        r.same_eigenvalue = r.same_eigenvalue && r.eigenstates && std::abs(m - r.mean.front()) < 1e-9;
    }
    return r;
}

}  // namespace fqc
