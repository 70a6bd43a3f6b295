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

#include "fqc/codes/theorem_demo.h"

#include <Eigen/Dense>
#include <vector>

#include "fqc/codes/stabilizer_code.h"
#include "fqc/sim/apply_string.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;
using Mat = Eigen::MatrixXcd;

Mat dense(const OperatorSum &op, const Layout &l) {
    const auto d = static_cast<Eigen::Index>(l.dimension());
    Mat m = Mat::Zero(d, d);
    for (Eigen::Index j = 0; j < d; j++) {
        StateVector e(l);
        e.set(static_cast<BasisIndex>(j), 1.0);
        StateVector out = apply_operator(e, op);
        for (const auto &[i, a] : out.amplitudes()) m(static_cast<Eigen::Index>(i), j) = a;
    }
    return m;
}

double norm(const Mat &m) { return m.rows() ? m.cwiseAbs().maxCoeff() : 0; }

/// Odd Majorana strings supported on sites {s, s+1}.
std::vector<MQS> odd_strings(uint32_t s) {
    std::vector<MQS> out;
    for (uint32_t mask = 1; mask < 16; mask++) {
        if (__builtin_popcount(mask) % 2 == 0) continue;
        std::vector<uint32_t> eta;
        for (uint32_t b = 0; b < 4; b++)
            if (mask >> b & 1) eta.push_back(2 * s + b);
        MQS m = MQS::from_factors(eta);
        if (!m.is_hermitian()) m = Phase::i() * m;
        out.push_back(m);
    }
    return out;
}

}  // namespace

nlohmann::json TheoremDemo::to_json() const {
    return {{"candidates_per_block", candidates_per_block},
            {"pairs_checked", pairs_checked},
            {"pairs_qualifying", pairs_qualifying},
            {"largest_projected_norm", largest_projected_norm},
            {"repetition_anticommutator", repetition_anticommutator},
            {"repetition_normalisation", repetition_normalisation},
            {"passed", passed()}};
}

TheoremDemo theorem_demo() {
    TheoremDemo out;
    const Layout l(0, 4);
    const cplx i1(0, 1);
    const auto d = static_cast<Eigen::Index>(l.dimension());

    // Number code projector: one particle in each block.
    Mat p = Mat::Zero(d, d);
    for (Eigen::Index k = 0; k < d; k++) {
        auto b = static_cast<BasisIndex>(k);
        bool ok = l.fermion(b, 0) + l.fermion(b, 1) == 1 && l.fermion(b, 2) + l.fermion(b, 3) == 1;
        p(k, k) = ok ? 1.0 : 0.0;
    }
    std::vector<Mat> cand[2];
    for (uint32_t block = 0; block < 2; block++) {
        auto strings = odd_strings(2 * block);
        for (const MQS &o1 : strings) {
            for (const MQS &o2 : strings) {
                if (o1 == o2 || commutation_class(o1, o2) != Commutation::Anticommutes) continue;
                Mat c = p * (dense(OperatorSum(o1), l) + i1 * dense(OperatorSum(o2), l)) * p * 0.5;
                out.largest_projected_norm = std::max(out.largest_projected_norm, norm(c));
                cand[block].push_back(c);
            }
        }
    }
    out.candidates_per_block = cand[0].size();
    for (const Mat &a : cand[0]) {
        for (const Mat &b : cand[1]) {
            out.pairs_checked++;
            bool anti = norm(a * b + b * a) < 1e-10;
            bool na = norm(a.adjoint() * a + a * a.adjoint() - p) < 1e-10;
            bool nb = norm(b.adjoint() * b + b * b.adjoint() - p) < 1e-10;
            if (anti && na && nb) out.pairs_qualifying++;
        }
    }

    // Parity code: two N = 2 repetition blocks.
    StabilizerCode ca = build_repetition(2), cb = ca.shifted(2);
    Mat q = Mat::Identity(d, d);
    for (const auto *c : {&ca, &cb})
        for (const MQS &g : c->generators) q = q * (Mat::Identity(d, d) + dense(OperatorSum(g), l)) * 0.5;
    Mat ad = dense(ca.logical_creation(), l), bd = dense(cb.logical_creation(), l);
    out.repetition_anticommutator = norm(q * (ad * bd + bd * ad) * q);
    for (const Mat *c : {&ad, &bd}) {
        out.repetition_normalisation =
            std::max(out.repetition_normalisation, norm(q * (c->adjoint() * *c + *c * c->adjoint()) * q - q));
    }
    return out;
}

}  // namespace fqc
