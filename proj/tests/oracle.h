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

// Dense Kronecker-product reference used only by the tests. Operators are built from creation matrices
// and gates from matrix exponentials of their generators, without touching the library's sparse kernels.
#ifndef FQC_TESTS_ORACLE_H
#define FQC_TESTS_ORACLE_H

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "fqc/circuit/circuit.h"
#include "fqc/majorana/operator_sum.h"
#include "fqc/majorana/pauli_string.h"
#include "fqc/sim/state_vector.h"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
constexpr cplx I(0, 1);

struct Space {
    uint32_t nq = 0;
    uint32_t nf = 0;
    std::vector<uint32_t> cutoffs;

    static Space of(const fqc::Layout &l) { return {l.qubits(), l.fermions(), l.cutoffs()}; }
    static Space of(const fqc::Registers &r) { return {r.qubits, r.fermions, r.boson_cutoffs}; }
    fqc::Layout layout() const { return fqc::Layout(nq, nf, cutoffs); }

    size_t factors() const { return nq + nf + cutoffs.size(); }
    size_t local_dim(size_t k) const { return k < nq + nf ? 2 : cutoffs[k - nq - nf] + 1; }
    size_t dim() const {
        size_t d = 1;
        for (size_t k = 0; k < factors(); k++) d *= local_dim(k);
        return d;
    }
};

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++)
        for (Eigen::Index j = 0; j < a.cols(); j++) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Mat pauli_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat pauli_y() { Mat m(2, 2); m << 0, -I, I, 0; return m; }
inline Mat pauli_z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
inline Mat raise() { Mat m(2, 2); m << 0, 0, 1, 0; return m; }  // |0> -> |1>

/// Product of local factors; `local[k]` empty means identity.
inline Mat product(const Space &sp, const std::vector<Mat> &local) {
    Mat out = Mat::Identity(1, 1);
    for (size_t k = 0; k < sp.factors(); k++) {
        const Mat &m = local[k];
        out = kron(out, m.size() ? m : Mat::Identity(sp.local_dim(k), sp.local_dim(k)));
    }
    return out;
}

inline Mat identity(const Space &sp) { return Mat::Identity(sp.dim(), sp.dim()); }

inline Mat qubit_op(const Space &sp, uint32_t q, const Mat &m) {
    std::vector<Mat> local(sp.factors());
    local[q] = m;
    return product(sp, local);
}

/// p_f^+ with a Z string over lower fermion modes.
inline Mat create(const Space &sp, uint32_t f) {
    std::vector<Mat> local(sp.factors());
    for (uint32_t g = 0; g < f; g++) local[sp.nq + g] = pauli_z();
    local[sp.nq + f] = raise();
    return product(sp, local);
}
inline Mat annihilate(const Space &sp, uint32_t f) { return create(sp, f).adjoint(); }
inline Mat number(const Space &sp, uint32_t f) { return create(sp, f) * annihilate(sp, f); }
inline Mat gamma(const Space &sp, uint32_t f) { return create(sp, f) + annihilate(sp, f); }
inline Mat gamma_tilde(const Space &sp, uint32_t f) { return -I * (create(sp, f) - annihilate(sp, f)); }
inline Mat qnumber(const Space &sp, uint32_t q) {
    Mat m(2, 2);
    m << 0, 0, 0, 1;
    return qubit_op(sp, q, m);
}

inline Mat boson_create(const Space &sp, uint32_t b) {
    uint32_t c = sp.cutoffs[b];
    Mat m = Mat::Zero(c + 1, c + 1);
    for (uint32_t n = 0; n < c; n++) m(n + 1, n) = std::sqrt(n + 1.0);
    std::vector<Mat> local(sp.factors());
    local[sp.nq + sp.nf + b] = m;
    return product(sp, local);
}

inline Mat of(const Space &sp, const fqc::MajoranaQubitString &s) {
    Mat out = identity(sp) * s.phase().value();
    for (uint32_t eta : s.majoranas()) {
        auto m = fqc::MajoranaIndex::from_flat(eta);
        out = out * (m.kind == fqc::MajoranaKind::Gamma ? gamma(sp, m.site) : gamma_tilde(sp, m.site));
    }
    for (const auto &[q, l] : s.paulis()) {
        out = out * qubit_op(sp, q, l == fqc::PauliLetter::X ? pauli_x() : l == fqc::PauliLetter::Y ? pauli_y() : pauli_z());
    }
    return out;
}

/// Pauli string over wires that follow the same ordering as the Space factors.
inline Mat of(const Space &sp, const fqc::PauliString &p) {
    std::vector<Mat> local(sp.factors());
    for (const auto &[w, l] : p.letters()) {
        local[w] = l == fqc::PauliLetter::X ? pauli_x() : l == fqc::PauliLetter::Y ? pauli_y() : pauli_z();
    }
    return p.phase().value() * product(sp, local);
}

inline Mat of(const Space &sp, const fqc::OperatorSum &o) {
    Mat out = Mat::Zero(sp.dim(), sp.dim());
    for (const auto &[s, c] : o.terms()) out += c * of(sp, s);
    return out;
}

inline Mat expm(const Mat &m) { return m.exp(); }

/// Dense unitary of a gate, taken from the generator written next to each kind.
inline Mat gate(const Space &sp, const fqc::Gate &g) {
    using fqc::GateKind;
    const auto &t = g.targets;
    const double th = g.angle.radians();
    auto n = [&](size_t k) { return number(sp, t[k]); };
    auto nq = [&](size_t k) { return qnumber(sp, t[k]); };
    auto X = [&](size_t k) { return qubit_op(sp, t[k], pauli_x()); };
    auto hop = [&]() {
        Mat h = create(sp, t[0]) * annihilate(sp, t[1]);
        return Mat(h + h.adjoint());
    };
    auto pairing = [&](double phi) {
        Mat h = std::polar(1.0, phi) * create(sp, t[0]) * create(sp, t[1]);
        return Mat(h + h.adjoint());
    };
    auto braid_gen = [&]() {
        // (p_i^+ - p_i)(p_j^+ + p_j)
        return Mat((create(sp, t[0]) - annihilate(sp, t[0])) * (create(sp, t[1]) + annihilate(sp, t[1])));
    };
    switch (g.kind) {
        case GateKind::Tf: return expm(I * (M_PI / 4) * n(0));
        case GateKind::TfDag: return expm(-I * (M_PI / 4) * n(0));
        case GateKind::Sf: return expm(I * (M_PI / 2) * n(0));
        case GateKind::SfDag: return expm(-I * (M_PI / 2) * n(0));
        case GateKind::Zf: return expm(I * M_PI * n(0));
        case GateKind::PhaseF: return expm(-I * th * n(0));
        case GateKind::H: {
            Mat h(2, 2);
            h << 1, 1, 1, -1;
            return qubit_op(sp, t[0], h / std::sqrt(2.0));
        }
        case GateKind::S: return expm(I * (M_PI / 2) * nq(0));
        case GateKind::Sdg: return expm(-I * (M_PI / 2) * nq(0));
        case GateKind::X: return X(0);
        case GateKind::Z: return qubit_op(sp, t[0], pauli_z());
        case GateKind::T: return expm(I * (M_PI / 4) * nq(0));
        case GateKind::Tdg: return expm(-I * (M_PI / 4) * nq(0));
        case GateKind::PhaseQ: return expm(-I * th * nq(0));
        case GateKind::Xrot: return expm(-I * (th / 2) * X(0));
        case GateKind::CNOT: return identity(sp) - nq(0) + nq(0) * X(1);
        case GateKind::CZ: return identity(sp) - 2 * nq(0) * nq(1);
        case GateKind::SWAP: {
            Mat y0 = qubit_op(sp, t[0], pauli_y()), y1 = qubit_op(sp, t[1], pauli_y());
            Mat z0 = qubit_op(sp, t[0], pauli_z()), z1 = qubit_op(sp, t[1], pauli_z());
            return (identity(sp) + X(0) * X(1) + y0 * y1 + z0 * z1) / 2.0;
        }
        case GateKind::XXq: return expm(I * (M_PI / 4) * X(0) * X(1));
        case GateKind::Braid: return expm(I * (M_PI / 4) * braid_gen());
        case GateKind::BraidDag: return expm(-I * (M_PI / 4) * braid_gen());
        case GateKind::BraidTheta: return expm(I * (th / 2) * braid_gen());
        case GateKind::CZf: return expm(I * M_PI * n(0) * n(1));
        case GateKind::CZfTheta: return expm(-I * th * n(0) * n(1));
        case GateKind::SqrtISwapF: return expm(I * (M_PI / 4) * hop());
        case GateKind::UTDown:
        case GateKind::UUpDown: return expm(-I * th * hop());
        case GateKind::PairIdeal: return expm(I * (M_PI / 4) * pairing(th));
        case GateKind::CZqf: return expm(I * M_PI * nq(0) * n(1));
        case GateKind::CZqfTheta: return expm(-I * th * nq(0) * n(1));
        case GateKind::BS: {
            Mat a = boson_create(sp, t[0]), b = boson_create(sp, t[1]);
            return expm(th * (a * b.adjoint() - b * a.adjoint()));
        }
        case GateKind::UDiss:
        case GateKind::Pair: {
            double ang = g.molecules > 0 ? M_PI / (4 * std::sqrt(g.molecules)) : 0.0;
            if (g.kind == GateKind::UDiss) ang = -ang;
            Mat h = std::polar(1.0, th) * boson_create(sp, t[0]).adjoint() * create(sp, t[1]) * create(sp, t[2]);
            return expm(I * ang * (h + h.adjoint()));
        }
    }
    throw std::logic_error("oracle: unknown gate");
}

/// Fermionic swap 1 + p_a^+ p_b + p_b^+ p_a - n_a - n_b.
inline Mat fswap(const Space &sp, uint32_t a, uint32_t b) {
    Mat h = create(sp, a) * annihilate(sp, b);
    return identity(sp) + h + h.adjoint() - number(sp, a) - number(sp, b);
}

inline Mat circuit(const Space &sp, const fqc::Circuit &c) {
    Mat u = identity(sp);
    for (const auto &op : c.ops) {
        if (const auto *g = std::get_if<fqc::Gate>(&op)) {
            u = gate(sp, *g) * u;
        } else if (const auto *s = std::get_if<fqc::MoveSwap>(&op)) {
            u = fswap(sp, s->a, s->b) * u;
        } else {
            throw std::logic_error("oracle: non-unitary op");
        }
    }
    return u;
}

/// Vacuum of the fermions with the given qubit and boson digits, then p^+ applied to modes in ascending order.
inline Vec basis(const Space &sp, const fqc::Occupation &o) {
    Vec v = Vec::Zero(sp.dim());
    size_t idx = 0;
    for (size_t k = 0; k < sp.factors(); k++) {
        size_t digit = 0;
        if (k < sp.nq) {
            digit = k < o.qubits.size() ? o.qubits[k] : 0;
        } else if (k >= sp.nq + sp.nf) {
            size_t b = k - sp.nq - sp.nf;
            digit = b < o.bosons.size() ? o.bosons[b] : 0;
        }
        idx = idx * sp.local_dim(k) + digit;
    }
    v(idx) = 1;
    for (uint32_t f = 0; f < o.fermions.size(); f++) {
        if (o.fermions[f]) v = create(sp, f) * v;
    }
    return v;
}

inline Vec random_state(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> nd;
    Vec v(dim);
    for (size_t k = 0; k < dim; k++) v(k) = cplx(nd(rng), nd(rng));
    return v.normalized();
}

/// min over phases of max |a - e^{i phi} b|.
inline double phase_distance(const Mat &a, const Mat &b) {
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) < 1e-14) return a.cwiseAbs().maxCoeff();
    cplx ph = a(r, c) / b(r, c);
    ph /= std::abs(ph);
    return (a - ph * b).cwiseAbs().maxCoeff();
}

inline double max_abs(const Mat &a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle

#endif
