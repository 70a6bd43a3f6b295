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

#include "fqc/sim/tomography.h"

#include <bit>
#include <map>
#include <stdexcept>

#include "fqc/sim/measure.h"

namespace fqc {

namespace {

BasisIndex fermion_part(const Layout &l, BasisIndex i) {
    BasisIndex out = 0;
    for (uint32_t f = 0; f < l.fermions(); f++) {
        out = (out << 1) | static_cast<BasisIndex>(l.fermion(i, f));
    }
    return out;
}

/// Sign of the raw basis vector inside the creation-ordered Fock state with the same pattern: (-1)^(k(k-1)/2).
double label_sign(BasisIndex bits) {
    int k = std::popcount(bits);
    return ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0;
}

BasisIndex strip_fermions(const Layout &l, BasisIndex i) {
    for (uint32_t f = 0; f < l.fermions(); f++) {
        if (l.fermion(i, f)) {
            i = l.flip_fermion(i, f);
        }
    }
    return i;
}

BasisIndex parse_label(const FermionLabel &lab, uint32_t nf) {
    if (lab.size() != nf) {
        throw std::invalid_argument("label '" + lab + "' does not cover " + std::to_string(nf) + " fermion modes");
    }
    BasisIndex out = 0;
    for (char c : lab) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bad label '" + lab + "'");
        }
        out = (out << 1) | static_cast<BasisIndex>(c == '1');
    }
    return out;
}

std::map<BasisIndex, size_t> label_positions(const std::vector<FermionLabel> &basis, uint32_t nf) {
    std::map<BasisIndex, size_t> pos;
    for (size_t k = 0; k < basis.size(); k++) {
        if (!pos.emplace(parse_label(basis[k], nf), k).second) {
            throw std::invalid_argument("duplicate label " + basis[k]);
        }
    }
    return pos;
}

void check_fermion_only(const Circuit &c) {
    for (const Op &op : c.ops) {
        const Gate *g = std::get_if<Gate>(&op);
        if (!g) {
            if (std::holds_alternative<MoveSwap>(op)) {
                continue;
            }
            throw std::invalid_argument("tomography rotations must be unitary");
        }
        for (const Target &t : g->typed_targets()) {
            if (t.kind != RegisterKind::Fermion) {
                throw std::invalid_argument("tomography rotations must act on fermions only");
            }
        }
    }
}

}  // namespace

double DensityMatrixOnSubspace::hermiticity_error() const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrixOnSubspace::min_eigenvalue() const {
    Eigen::MatrixXcd h = (matrix + matrix.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    return es.eigenvalues().minCoeff();
}

double DensityMatrixOnSubspace::fidelity(const Eigen::VectorXcd &psi) const {
    return (psi.adjoint() * matrix * psi)(0, 0).real();
}

nlohmann::json DensityMatrixOnSubspace::to_json() const {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < matrix.rows(); r++) {
        nlohmann::json rr = nlohmann::json::array(), ir = nlohmann::json::array();
        for (Eigen::Index c = 0; c < matrix.cols(); c++) {
            rr.push_back(matrix(r, c).real());
            ir.push_back(matrix(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ir);
    }
    return {{"basis", basis}, {"re", re}, {"im", im}};
}

DensityMatrixOnSubspace project_density(const StateVector &s, const std::vector<FermionLabel> &basis) {
    const Layout &l = s.layout();
    auto pos = label_positions(basis, l.fermions());
    // Group amplitudes by the rest of the register so the partial trace is a sum of outer products.
    std::map<BasisIndex, std::vector<std::pair<size_t, cplx>>> env;
    for (BasisIndex i : s.sorted_support()) {
        BasisIndex bits = fermion_part(l, i);
        auto it = pos.find(bits);
        if (it != pos.end()) {
            env[strip_fermions(l, i)].emplace_back(it->second, label_sign(bits) * s.amplitude(i));
        }
    }
    double norm = s.norm_squared();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
    for (const auto &[e, v] : env) {
        for (const auto &[a, x] : v) {
            for (const auto &[b, y] : v) {
                rho(a, b) += x * std::conj(y) / norm;
            }
        }
    }
    return {basis, rho};
}

std::vector<double> measure_populations(const StateVector &s, const std::vector<FermionLabel> &basis) {
    DensityMatrixOnSubspace d = project_density(s, basis);
    std::vector<double> out;
    for (Eigen::Index k = 0; k < d.matrix.rows(); k++) {
        out.push_back(d.matrix(k, k).real());
    }
    return out;
}

DensityMatrixOnSubspace reconstruct(uint32_t n_fermions, const std::vector<Circuit> &rotations,
                                    const std::vector<FermionLabel> &basis,
                                    const std::vector<std::vector<double>> &populations) {
    const size_t d = basis.size();
    if (populations.size() != rotations.size()) {
        throw std::invalid_argument("one population row per rotation is required");
    }
    auto pos = label_positions(basis, n_fermions);
    Layout fl(0, n_fermions, {});
    // Column k of u(r) holds the labelled amplitudes of R|b_k>.
    std::vector<Eigen::MatrixXcd> us;
    for (const Circuit &r : rotations) {
        check_fermion_only(r);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
        for (const auto &[bits, k] : pos) {
            Occupation occ;
            for (uint32_t f = 0; f < n_fermions; f++) {
                occ.fermions.push_back(static_cast<int>((bits >> (n_fermions - 1 - f)) & 1));
            }
            StateVector out = apply_circuit(StateVector::basis_state(fl, occ), r);
            for (const auto &[i, a] : out.amplitudes()) {
                BasisIndex out_bits = fermion_part(fl, i);
                auto it = pos.find(out_bits);
                if (it != pos.end()) {
                    u(it->second, k) = label_sign(out_bits) * a;
                }
            }
        }
        us.push_back(u);
    }
    // Real parameters: rho_kk, then Re and Im of rho_ab for a < b.
    const size_t npar = d * d;
    auto param = [&](size_t a, size_t b) {
        // Index of Re(rho_ab) for a < b; Im follows it.
        size_t off = d;
        for (size_t x = 0; x < a; x++) {
            off += 2 * (d - 1 - x);
        }
        return off + 2 * (b - a - 1);
    };
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rotations.size() * d, npar);
    Eigen::VectorXd y(rotations.size() * d);
    for (size_t r = 0; r < rotations.size(); r++) {
        if (populations[r].size() != d) {
            throw std::invalid_argument("population row has the wrong length");
        }
        const Eigen::MatrixXcd &u = us[r];
        for (size_t k = 0; k < d; k++) {
            size_t row = r * d + k;
            y(row) = populations[r][k];
            // p_k = sum_ab u_ka rho_ab conj(u_kb)
            for (size_t a = 0; a < d; a++) {
                A(row, a) += std::norm(u(k, a));
                for (size_t b = a + 1; b < d; b++) {
                    cplx w = u(k, a) * std::conj(u(k, b));
                    size_t p = param(a, b);
                    // rho_ab w + rho_ba conj(w) = 2 Re(rho_ab w)
                    A(row, p) += 2 * w.real();
                    A(row, p + 1) += -2 * w.imag();
                }
            }
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    qr.setThreshold(1e-10);
    if (static_cast<size_t>(qr.rank()) < npar) {
        throw std::invalid_argument("tomography settings fix only " + std::to_string(qr.rank()) + " of " +
                                    std::to_string(npar) + " parameters");
    }
    Eigen::VectorXd x = qr.solve(y);
    Eigen::MatrixXcd rho(d, d);
    for (size_t a = 0; a < d; a++) {
        rho(a, a) = x(a);
        for (size_t b = a + 1; b < d; b++) {
            size_t p = param(a, b);
            rho(a, b) = cplx(x(p), x(p + 1));
            rho(b, a) = std::conj(rho(a, b));
        }
    }
    return {basis, rho};
}

DensityMatrixOnSubspace subspace_tomography(const StateVector &prepared, const std::vector<Circuit> &rotations,
                                            const std::vector<FermionLabel> &basis) {
    std::vector<std::vector<double>> pops;
    for (const Circuit &r : rotations) {
        check_fermion_only(r);
        pops.push_back(measure_populations(apply_circuit(prepared, r), basis));
    }
    return reconstruct(prepared.layout().fermions(), rotations, basis, pops);
}

DensityMatrixOnSubspace subspace_tomography(const StateVector &initial, const Circuit &prepare,
                                            const std::vector<Circuit> &rotations,
                                            const std::vector<FermionLabel> &basis) {
    return subspace_tomography(apply_circuit(initial, prepare), rotations, basis);
}

}  // namespace fqc
