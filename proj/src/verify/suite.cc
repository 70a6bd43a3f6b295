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

#include "fqc/verify/suite.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "fqc/circuit/braid_variants.h"
#include "fqc/circuit/conjugate.h"
#include "fqc/codes/color_code.h"
#include "fqc/codes/decoder.h"
#include "fqc/codes/encoding.h"
#include "fqc/codes/logical_gates.h"
#include "fqc/codes/syndrome.h"
#include "fqc/codes/theorem_demo.h"
#include "fqc/majorana/fermion_ops.h"
#include "fqc/sim/apply_string.h"
#include "fqc/sim/knill_laflamme.h"
#include "fqc/sim/measure.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;
using Mat = Eigen::MatrixXcd;

Mat dense(const Layout &l, const std::function<StateVector(const StateVector &)> &apply) {
    const auto d = static_cast<Eigen::Index>(l.dimension());
    Mat m(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        StateVector e(l);
        e.set(static_cast<BasisIndex>(i), 1);
        m.col(i) = apply(e).to_dense();
    }
    return m;
}

Mat dense_gate(const Layout &l, const Gate &g) {
    return dense(l, [&](const StateVector &s) { return apply_gate(s, g); });
}
Mat dense_circuit(const Layout &l, const Circuit &c) {
    return dense(l, [&](const StateVector &s) { return apply_circuit(s, c); });
}
Mat dense_op(const Layout &l, const OperatorSum &o) {
    return dense(l, [&](const StateVector &s) { return apply_operator(s, o); });
}

double max_abs(const Mat &m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Distance after removing the best global phase.
double phase_distance(const Mat &a, const Mat &b) {
    cplx t = (b.adjoint() * a).trace();
    cplx ph = std::abs(t) > 0 ? t / std::abs(t) : cplx(1);
    return max_abs(a - ph * b);
}

Check make(std::string group, std::string name, double dev, double tol, std::string detail = {}) {
    return {std::move(group), std::move(name), dev, tol, dev <= tol, std::move(detail)};
}

std::vector<Gate> placements(GateKind k, Angle angle, uint32_t nq, uint32_t nf) {
    const auto &sig = gate_info(k).signature;
    std::vector<Gate> out;
    std::vector<uint32_t> cur;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == sig.size()) {
            out.push_back(Gate{k, cur, angle, 0});
            return;
        }
        uint32_t n = sig[pos] == RegisterKind::Qubit ? nq : sig[pos] == RegisterKind::Fermion ? nf : 0;
        for (uint32_t t = 0; t < n; t++) {
            bool clash = false;
            for (size_t p = 0; p < pos; p++) clash = clash || (sig[p] == sig[pos] && cur[p] == t);
            if (clash) continue;
            cur.push_back(t);
            rec(pos + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

bool symbolic(GateKind k) {
    for (RegisterKind r : gate_info(k).signature) {
        if (r == RegisterKind::Boson) return false;
    }
    try {
        return supports_symbolic(Gate{k, {}, Angle(), 0});
    } catch (const std::exception &) {
        return false;
    }
}

void conjugation_rules(const VerifyOptions &opt, std::vector<Check> &out) {
    ConjugationOptions copt;
    copt.corrupt_kind = opt.corrupt_kind;
    const std::vector<Angle> angles = {Angle::pi_fraction(1, 2), Angle::pi_fraction(-1, 4), Angle::radians(0.37)};
    for (GateKind k : all_gate_kinds()) {
        if (!symbolic(k)) continue;
        // Three fermion modes and one qubit, or two qubits for qubit-qubit gates.
        uint32_t nq = 1;
        const auto &sig = gate_info(k).signature;
        if (std::count(sig.begin(), sig.end(), RegisterKind::Qubit) > 1) nq = 2;
        const uint32_t nf = 3;
        Layout l(nq, nf, {});
        std::vector<MQS> factors;
        for (uint32_t f = 0; f < nf; f++) {
            factors.push_back(MQS::gamma(f));
            factors.push_back(MQS::gamma_tilde(f));
        }
        for (uint32_t q = 0; q < nq; q++) {
            for (PauliLetter p : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) factors.push_back(MQS::pauli(q, p));
        }
        std::vector<Mat> factor_mats;
        for (const MQS &s : factors) factor_mats.push_back(dense_op(l, OperatorSum(s)));

        double worst = 0;
        size_t count = 0;
        for (const Angle &a : gate_info(k).has_angle ? angles : std::vector<Angle>{Angle()}) {
            for (const Gate &g : placements(k, a, nq, nf)) {
                Mat u = dense_gate(l, g);
                for (size_t s = 0; s < factors.size(); s++) {
                    Mat sym = dense_op(l, conjugate(g, factors[s], copt));
                    worst = std::max(worst, max_abs(sym - u.adjoint() * factor_mats[s] * u));
                    count++;
                }
            }
        }
        out.push_back(make("conjugation", gate_info(k).name, worst, opt.tolerance,
                           std::to_string(count) + " (placement, operator) pairs"));
    }
}

void braid_identities(const VerifyOptions &opt, std::vector<Check> &out) {
    Layout l(0, 2, {});
    const Mat id = Mat::Identity(4, 4);
    auto g = [&](uint32_t f) { return dense_op(l, OperatorSum(MQS::gamma(f))); };
    auto gt = [&](uint32_t f) { return dense_op(l, OperatorSum(MQS::gamma_tilde(f))); };
    // exp(-pi/4 M) = (1 - M)/sqrt2 whenever M^2 = -1.
    const double r = 1 / std::sqrt(2.0);
    Mat tt = r * (id - gt(0) * gt(1));
    Mat pp = r * (id - g(0) * g(1));
    Mat inv = r * (id + gt(0) * g(1));
    out.push_back(make("braid", "tilde-tilde",
                       phase_distance(dense_circuit(l, braid_variant(BraidVariant::TildeTilde, 0, 1)), tt),
                       opt.tolerance));
    out.push_back(make("braid", "plain-plain",
                       phase_distance(dense_circuit(l, braid_variant(BraidVariant::PlainPlain, 0, 1)), pp),
                       opt.tolerance));
    out.push_back(make("braid", "inverse",
                       phase_distance(dense_circuit(l, braid_variant(BraidVariant::Inverse, 0, 1)), inv),
                       opt.tolerance));
}

StateVector logical_state(const StabilizerCode &code, const Layout &l, uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0, 2 * M_PI);
    LogicalBasis b = logical_basis(code, l);
    StateVector s = b.zero;
    s.scale(std::polar(std::cos(0.4), u(gen)));
    StateVector o = b.one;
    o.scale(std::polar(std::sin(0.4), u(gen)));
    s += o;
    s.normalize();
    return s;
}

void detection_and_correction(const VerifyOptions &opt, std::vector<Check> &out) {
    StabilizerCode two = build_repetition(2);
    LogicalBasis tb = logical_basis(two, Layout(0, 2, {}));
    KLReport n1 = kl_check({tb.zero, tb.one}, LabelledError{"n1", number(0)});
    KLReport p1 = kl_check({tb.zero, tb.one}, LabelledError{"p1", annihilation(0)});
    out.push_back(make("knill-laflamme", "two-site detects n1", n1.deviation, opt.tolerance));
    out.push_back({"knill-laflamme", "two-site misses p1", p1.deviation, opt.tolerance, !p1.detectable,
                   "loss is not detectable"});

    StabilizerCode steane = build_color_code(3);
    std::set<std::vector<int>> syndromes;
    for (uint32_t e = 0; e < 2 * steane.n_sites; e++) {
        syndromes.insert(syndrome_of(steane.generators, MQS::majorana(MajoranaIndex::from_flat(e))));
    }
    bool distinct = syndromes.size() == 2 * steane.n_sites && !syndromes.count(std::vector<int>(steane.generators.size(), 0));
    out.push_back({"decoder", "steane single-Majorana syndromes", static_cast<double>(syndromes.size()), 0, distinct,
                   std::to_string(syndromes.size()) + " distinct non-trivial syndromes"});

    Circuit full = syndrome_circuit(steane);
    full.append(decoding_circuit(steane, 0, steane.n_sites));
    Layout l = Layout::from(full.registers);
    StateVector psi = logical_state(steane, l, opt.seed);
    double worst = 0;
    for (uint32_t e = 0; e < 2 * steane.n_sites; e++) {
        Rng rng = Rng::stream(opt.seed, e);
        RunResult r = run_circuit(apply_string(psi, MQS::majorana(MajoranaIndex::from_flat(e))), full, &rng);
        worst = std::max(worst, 1 - std::norm(psi.inner(r.state)));
    }
    out.push_back(make("decoder", "steane corrects every single Majorana", worst, opt.tolerance, "1 - fidelity"));
}

void logical_gates(const VerifyOptions &opt, std::vector<Check> &out) {
    const std::vector<LogicalGate> round = {LogicalGate::Braid, LogicalGate::CZf, LogicalGate::CZqf, LogicalGate::Sf,
                                            LogicalGate::Tf};
    for (const StabilizerCode &code : {build_repetition(2), build_repetition(3), build_color_code(3)}) {
        const std::string tag = code.name + "-" + std::to_string(code.n_sites);
        for (LogicalGate g : round) {
            RoundTrip rt = round_trip(code, g);
            out.push_back(make("logical", tag + " " + logical_gate_name(g) + " round trip",
                               std::max(rt.deviation, rt.leakage), opt.tolerance));
            LogicalReport rep = verify_logical(code, g);
            out.push_back({"logical", tag + " " + logical_gate_name(g) + " conjugation", rep.ok() ? 0.0 : 1.0, 0,
                           rep.ok(), rep.symbolic ? "symbolic" : "non-Clifford: round trip only"});
        }
    }
    for (uint32_t d : {3u, 5u}) {
        std::optional<Phase> ph = transversal_czf_phase(build_color_code(d));
        bool ok = ph && *ph == Phase::minus_i();
        out.push_back({"logical", "transversal CZf phase d=" + std::to_string(d), ok ? 0.0 : 1.0, 0, ok,
                       ph ? ph->str() : "no phase"});
    }
}

}  // namespace

nlohmann::json Check::to_json() const {
    return {{"group", group},         {"name", name},     {"deviation", deviation},
            {"tolerance", tolerance}, {"passed", passed}, {"detail", detail}};
}

bool VerifyReport::ok() const { return failures().empty(); }

std::vector<std::string> VerifyReport::failures() const {
    std::vector<std::string> f;
    for (const Check &c : checks) {
        if (!c.passed) f.push_back(c.group + ": " + c.name);
    }
    return f;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Check &c : checks) arr.push_back(c.to_json());
    return {{"ok", ok()}, {"checks", arr}, {"failures", failures()}};
}

VerifyReport run_verify(const VerifyOptions &opt) {
    VerifyReport r;
    conjugation_rules(opt, r.checks);
    braid_identities(opt, r.checks);
    detection_and_correction(opt, r.checks);
    logical_gates(opt, r.checks);
    TheoremDemo t = theorem_demo();
    r.checks.push_back({"theorem", "number codes carry no fermionic logical", t.largest_projected_norm, 0,
                        t.passed(opt.tolerance),
                        std::to_string(t.pairs_checked) + " pairs, " + std::to_string(t.pairs_qualifying) + " qualify"});
    return r;
}

}  // namespace fqc
