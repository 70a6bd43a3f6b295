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

#include "fqc/sim/apply_gate.h"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace fqc {

namespace {

using Image = std::optional<std::pair<BasisIndex, cplx>>;
using SingleImage = std::function<Image(BasisIndex)>;

constexpr cplx I(0, 1);

void check_targets(const Layout &l, const Gate &g) {
    validate(g);
    for (const Target &t : g.typed_targets()) {
        uint32_t n = t.kind == RegisterKind::Qubit ? l.qubits() : t.kind == RegisterKind::Fermion ? l.fermions() : l.bosons();
        if (t.index >= n) {
            throw std::invalid_argument("gate " + g.str() + " targets a register outside the layout");
        }
    }
}

StateVector diagonal(const StateVector &s, const std::function<cplx(BasisIndex)> &phase) {
    StateVector out(s.layout());
    for (const auto &[i, a] : s.amplitudes()) {
        out.set(i, a * phase(i));
    }
    return out;
}

StateVector permute(const StateVector &s, const SingleImage &k) {
    StateVector out(s.layout());
    for (const auto &[i, a] : s.amplitudes()) {
        if (auto img = k(i)) {
            out.add(img->first, a * img->second);
        }
    }
    return out;
}

/// exp(i a K) for Hermitian K with K^2 = 1 acting as a single-image map.
StateVector exp_involution(const StateVector &s, const SingleImage &k, double a) {
    StateVector out(s.layout());
    double c = std::cos(a);
    cplx sn = I * std::sin(a);
    for (const auto &[i, amp] : s.amplitudes()) {
        out.add(i, c * amp);
        if (auto img = k(i)) {
            out.add(img->first, sn * img->second * amp);
        }
    }
    out.prune(0);
    return out;
}

/// exp(-i alpha G) for Hermitian single-image G with diagonal G^2 = g2.
StateVector exp_hermitian(const StateVector &s, const SingleImage &gmap, const std::function<double(BasisIndex)> &g2,
                          double alpha) {
    StateVector out(s.layout());
    for (const auto &[i, amp] : s.amplitudes()) {
        double w2 = g2(i);
        if (w2 <= 0) {
            out.add(i, amp);
            continue;
        }
        double w = std::sqrt(w2);
        out.add(i, std::cos(alpha * w) * amp);
        if (auto img = gmap(i)) {
            out.add(img->first, -I * (std::sin(alpha * w) / w) * img->second * amp);
        }
    }
    out.prune(0);
    return out;
}

Image chain(const std::vector<SingleImage> &ops, BasisIndex i) {
    cplx c = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        auto r = (*it)(i);
        if (!r) {
            return std::nullopt;
        }
        i = r->first;
        c *= r->second;
    }
    return std::make_pair(i, c);
}

SingleImage creator(const Layout &l, uint32_t f) {
    return [&l, f](BasisIndex i) -> Image {
        auto r = create_at(l, i, f);
        if (!r) return std::nullopt;
        return std::make_pair(r->first, cplx(r->second));
    };
}

SingleImage annihilator(const Layout &l, uint32_t f) {
    return [&l, f](BasisIndex i) -> Image {
        auto r = annihilate_at(l, i, f);
        if (!r) return std::nullopt;
        return std::make_pair(r->first, cplx(r->second));
    };
}

/// (p^+ + s p): exactly one of the two terms survives on a basis state.
SingleImage plus_minus(const Layout &l, uint32_t f, double s) {
    return [&l, f, s](BasisIndex i) -> Image {
        if (l.fermion(i, f)) {
            auto r = annihilate_at(l, i, f);
            return std::make_pair(r->first, cplx(s * r->second));
        }
        auto r = create_at(l, i, f);
        return std::make_pair(r->first, cplx(r->second));
    };
}

/// Beamsplitter exp(theta (a^+ b - b^+ a)) within one sector of n = nA + nB. Returns column nA_in.
std::vector<double> bs_column(uint32_t n, uint32_t na_in, double theta) {
    std::vector<double> col(n + 1, 0.0);
    double c = std::cos(theta);
    double s = std::sin(theta);
    auto log_binom = [](uint32_t n, uint32_t k) {
        return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    };
    auto term = [&](uint32_t n, uint32_t k, double x, uint32_t px, double y, uint32_t py) {
        // sqrt(C(n,k)) x^px y^py with signs handled separately
        if ((px > 0 && x == 0) || (py > 0 && y == 0)) {
            return 0.0;
        }
        double lg = 0.5 * log_binom(n, k);
        if (px) lg += px * std::log(std::abs(x));
        if (py) lg += py * std::log(std::abs(y));
        double sign = 1;
        if (x < 0 && (px & 1)) sign = -sign;
        if (y < 0 && (py & 1)) sign = -sign;
        return sign * std::exp(lg);
    };
    if (std::abs(c) < 1e-12) {
        // Full swap: a^+ -> -s b^+, b^+ -> s a^+.
        double v = (na_in & 1) ? -1.0 : 1.0;
        if (s < 0 && (n & 1)) v = -v;
        col[n - na_in] = v;
        return col;
    }
    if (na_in == n) {
        // |n,0> -> sum_k sqrt(C(n,k)) c^k (-s)^(n-k) |k, n-k>
        for (uint32_t k = 0; k <= n; k++) {
            col[k] = term(n, k, c, k, -s, n - k);
        }
        return col;
    }
    if (na_in == 0) {
        // |0,n> -> sum_k sqrt(C(n,k)) s^k c^(n-k) |k, n-k>
        for (uint32_t k = 0; k <= n; k++) {
            col[k] = term(n, k, s, k, c, n - k);
        }
        return col;
    }
    // General input: exponentiate the tridiagonal generator in this sector.
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (uint32_t a = 0; a < n; a++) {
        // K |a, n-a> has +sqrt((a+1)(n-a)) |a+1, n-a-1>
        double v = std::sqrt((a + 1.0) * (n - a));
        k(a + 1, a) = v;
        k(a, a + 1) = -v;
    }
    Eigen::MatrixXcd h = cplx(0, 1) * k.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd ph = (-cplx(0, 1) * theta * es.eigenvalues().cast<cplx>()).array().exp();
    Eigen::MatrixXcd u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    for (uint32_t a = 0; a <= n; a++) {
        col[a] = u(a, na_in).real();
    }
    return col;
}

StateVector apply_bs(const StateVector &s, uint32_t ma, uint32_t mb, double theta, const SimOptions &opt) {
    const Layout &l = s.layout();
    StateVector out(l);
    double leaked = 0;
    for (const auto &[i, amp] : s.amplitudes()) {
        uint32_t na = l.boson(i, ma);
        uint32_t nb = l.boson(i, mb);
        uint32_t n = na + nb;
        std::vector<double> col = bs_column(n, na, theta);
        for (uint32_t k = 0; k <= n; k++) {
            if (col[k] == 0) continue;
            if (k > l.cutoff(ma) || n - k > l.cutoff(mb)) {
                leaked += std::norm(col[k] * amp);
                continue;
            }
            out.add(l.with_boson(l.with_boson(i, ma, k), mb, n - k), col[k] * amp);
        }
    }
    if (leaked > opt.leakage_tol) {
        throw TruncationError("beamsplitter population beyond boson cutoff: " + std::to_string(leaked));
    }
    out.prune(0);
    return out;
}

/// exp(-i alpha (e^{i phi} b A + h.c.)) with A = p_i^+ p_j^+.
StateVector apply_boson_pair(const StateVector &s, uint32_t m, uint32_t fi, uint32_t fj, double alpha, double phi,
                             const SimOptions &opt) {
    const Layout &l = s.layout();
    cplx e = std::polar(1.0, phi);
    auto a_create = [&](BasisIndex i) { return chain({creator(l, fi), creator(l, fj)}, i); };
    auto a_destroy = [&](BasisIndex i) { return chain({annihilator(l, fj), annihilator(l, fi)}, i); };
    double leaked = 0;
    SingleImage g = [&](BasisIndex i) -> Image {
        int oi = l.fermion(i, fi);
        int oj = l.fermion(i, fj);
        uint32_t n = l.boson(i, m);
        if (oi == 0 && oj == 0 && n > 0) {
            auto r = a_create(i);
            return std::make_pair(l.with_boson(r->first, m, n - 1), e * std::sqrt(double(n)) * r->second);
        }
        if (oi == 1 && oj == 1) {
            auto r = a_destroy(i);
            if (n + 1 > l.cutoff(m)) {
                return std::nullopt;
            }
            return std::make_pair(l.with_boson(r->first, m, n + 1), std::conj(e) * std::sqrt(n + 1.0) * r->second);
        }
        return std::nullopt;
    };
    auto g2 = [&](BasisIndex i) -> double {
        int oi = l.fermion(i, fi);
        int oj = l.fermion(i, fj);
        uint32_t n = l.boson(i, m);
        if (oi == 0 && oj == 0) return n;
        if (oi == 1 && oj == 1) return n + 1.0;
        return 0;
    };
    for (const auto &[i, amp] : s.amplitudes()) {
        if (l.fermion(i, fi) && l.fermion(i, fj) && l.boson(i, m) + 1 > l.cutoff(m)) {
            double w = std::sqrt(l.boson(i, m) + 1.0);
            leaked += std::norm(std::sin(alpha * w) * amp);
        }
    }
    if (leaked > opt.leakage_tol) {
        throw TruncationError("pairing gate drives population beyond boson cutoff: " + std::to_string(leaked));
    }
    return exp_hermitian(s, g, g2, alpha);
}

double pulse_angle(double n) { return n > 0 ? M_PI / (4 * std::sqrt(n)) : 0.0; }

Eigen::Matrix2cd qubit_matrix(const Gate &g) {
    Eigen::Matrix2cd m;
    const double r = 1 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H:
            m << r, r, r, -r;
            return m;
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        default: {
            double h = g.angle.radians() / 2;
            m << std::cos(h), -I * std::sin(h), -I * std::sin(h), std::cos(h);
            return m;
        }
    }
}

StateVector apply_qubit_1(const StateVector &s, uint32_t q, const Eigen::Matrix2cd &m) {
    const Layout &l = s.layout();
    StateVector out(l);
    for (const auto &[i, a] : s.amplitudes()) {
        int b = l.qubit(i, q);
        BasisIndex other = l.flip_qubit(i, q);
        out.add(i, m(b, b) * a);
        out.add(other, m(1 - b, b) * a);
    }
    out.prune(0);
    return out;
}

}  // namespace

StateVector apply_move_swap(const StateVector &s, uint32_t a, uint32_t b) {
    const Layout &l = s.layout();
    if (a >= l.fermions() || b >= l.fermions() || a == b) {
        throw std::invalid_argument("bad move-swap modes");
    }
    uint32_t lo = std::min(a, b);
    uint32_t hi = std::max(a, b);
    return permute(s, [&](BasisIndex i) -> Image {
        int bl = l.fermion(i, lo);
        int bh = l.fermion(i, hi);
        if (bl == bh) {
            return std::make_pair(i, cplx(bl ? -1.0 : 1.0));
        }
        int between = l.occupied_before(i, hi) - l.occupied_before(i, lo) - bl;
        BasisIndex j = l.flip_fermion(l.flip_fermion(i, lo), hi);
        return std::make_pair(j, cplx((between & 1) ? -1.0 : 1.0));
    });
}

StateVector apply_gate(const StateVector &s, const Gate &g, const SimOptions &opt) {
    const Layout &l = s.layout();
    check_targets(l, g);
    const auto &t = g.targets;
    const double th = g.angle.radians();
    auto nf = [&](BasisIndex i, uint32_t k) { return l.fermion(i, t[k]); };
    auto nq = [&](BasisIndex i, uint32_t k) { return l.qubit(i, t[k]); };
    auto phase_if = [](bool on, double a) { return on ? std::polar(1.0, a) : cplx(1); };

    switch (g.kind) {
        case GateKind::Tf:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nf(i, 0), M_PI / 4); });
        case GateKind::TfDag:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nf(i, 0), -M_PI / 4); });
        case GateKind::Sf:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nf(i, 0), M_PI / 2); });
        case GateKind::SfDag:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nf(i, 0), -M_PI / 2); });
        case GateKind::Zf:
            return diagonal(s, [&](BasisIndex i) { return cplx(nf(i, 0) ? -1.0 : 1.0); });
        case GateKind::PhaseF:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nf(i, 0), -th); });
        case GateKind::S:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nq(i, 0), M_PI / 2); });
        case GateKind::Sdg:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nq(i, 0), -M_PI / 2); });
        case GateKind::Z:
            return diagonal(s, [&](BasisIndex i) { return cplx(nq(i, 0) ? -1.0 : 1.0); });
        case GateKind::T:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nq(i, 0), M_PI / 4); });
        case GateKind::Tdg:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nq(i, 0), -M_PI / 4); });
        case GateKind::PhaseQ:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nq(i, 0), -th); });
        case GateKind::CZ:
            return diagonal(s, [&](BasisIndex i) { return cplx(nq(i, 0) && nq(i, 1) ? -1.0 : 1.0); });
        case GateKind::CZf:
            return diagonal(s, [&](BasisIndex i) { return cplx(nf(i, 0) && nf(i, 1) ? -1.0 : 1.0); });
        case GateKind::CZfTheta:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nf(i, 0) && nf(i, 1), -th); });
        case GateKind::CZqf:
            return diagonal(s, [&](BasisIndex i) { return cplx(nq(i, 0) && l.fermion(i, t[1]) ? -1.0 : 1.0); });
        case GateKind::CZqfTheta:
            return diagonal(s, [&](BasisIndex i) { return phase_if(nq(i, 0) && l.fermion(i, t[1]), -th); });
        case GateKind::H:
        case GateKind::X:
        case GateKind::Xrot:
            return apply_qubit_1(s, t[0], qubit_matrix(g));
        case GateKind::CNOT:
            return permute(s, [&](BasisIndex i) -> Image {
                return std::make_pair(nq(i, 0) ? l.flip_qubit(i, t[1]) : i, cplx(1));
            });
        case GateKind::SWAP:
            return permute(s, [&](BasisIndex i) -> Image {
                if (nq(i, 0) == nq(i, 1)) return std::make_pair(i, cplx(1));
                return std::make_pair(l.flip_qubit(l.flip_qubit(i, t[0]), t[1]), cplx(1));
            });
        case GateKind::XXq:
            return exp_involution(
                s,
                [&](BasisIndex i) -> Image { return std::make_pair(l.flip_qubit(l.flip_qubit(i, t[0]), t[1]), cplx(1)); },
                M_PI / 4);
        case GateKind::Braid:
        case GateKind::BraidDag:
        case GateKind::BraidTheta: {
            // exp(i (theta/2) K) with K = (p_i^+ - p_i)(p_j^+ + p_j), Hermitian and K^2 = 1.
            double angle = g.kind == GateKind::Braid ? M_PI / 2 : g.kind == GateKind::BraidDag ? -M_PI / 2 : th;
            std::vector<SingleImage> k = {plus_minus(l, t[0], -1), plus_minus(l, t[1], +1)};
            return exp_involution(s, [&](BasisIndex i) { return chain(k, i); }, angle / 2);
        }
        case GateKind::SqrtISwapF:
        case GateKind::UTDown:
        case GateKind::UUpDown: {
            double alpha = g.kind == GateKind::SqrtISwapF ? -M_PI / 4 : th;
            SingleImage hop = [&](BasisIndex i) -> Image {
                int a = nf(i, 0);
                int b = nf(i, 1);
                if (a == b) return std::nullopt;
                if (b) return chain({creator(l, t[0]), annihilator(l, t[1])}, i);
                return chain({creator(l, t[1]), annihilator(l, t[0])}, i);
            };
            auto g2 = [&](BasisIndex i) { return nf(i, 0) != nf(i, 1) ? 1.0 : 0.0; };
            return exp_hermitian(s, hop, g2, alpha);
        }
        case GateKind::PairIdeal: {
            cplx e = std::polar(1.0, th);
            SingleImage pr = [&](BasisIndex i) -> Image {
                int a = nf(i, 0);
                int b = nf(i, 1);
                if (a != b) return std::nullopt;
                if (!a) {
                    auto r = chain({creator(l, t[0]), creator(l, t[1])}, i);
                    return std::make_pair(r->first, e * r->second);
                }
                auto r = chain({annihilator(l, t[1]), annihilator(l, t[0])}, i);
                return std::make_pair(r->first, std::conj(e) * r->second);
            };
            auto g2 = [&](BasisIndex i) { return nf(i, 0) == nf(i, 1) ? 1.0 : 0.0; };
            return exp_hermitian(s, pr, g2, -M_PI / 4);
        }
        case GateKind::BS:
            return apply_bs(s, t[0], t[1], th, opt);
        case GateKind::UDiss:
            return apply_boson_pair(s, t[0], t[1], t[2], pulse_angle(g.molecules), th, opt);
        case GateKind::Pair:
            return apply_boson_pair(s, t[0], t[1], t[2], -pulse_angle(g.molecules), th, opt);
    }
    throw std::logic_error("unhandled gate kind");
}

}  // namespace fqc
