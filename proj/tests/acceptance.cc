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

// Acceptance run: one PASS/FAIL line per criterion with the measured numbers. Exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fqc/circuit/braid_variants.h"
#include "fqc/circuit/conjugate.h"
#include "fqc/circuit/resources.h"
#include "fqc/codes/theorem_demo.h"
#include "fqc/gadgets/baselines.h"
#include "fqc/gadgets/ffft.h"
#include "fqc/gadgets/scaling.h"
#include "fqc/pairing/experiments.h"
#include "fqc/pairing/fit.h"
#include "fqc/sim/measure.h"
#include "fqc/verify/suite.h"
#include "oracle.h"

using namespace fqc;
using MQS = MajoranaQubitString;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string &detail) {
    std::printf("criterion %d %s: %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) failures++;
}

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: every symbolic rule against dense conjugation ----

void criterion_table() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<Angle> angles = {Angle::pi_fraction(1, 2), Angle::pi_fraction(-1, 4), Angle::radians(0.37)};
    double worst = 0;
    size_t checked = 0, kinds = 0;
    std::string worst_gate;
    for (GateKind k : all_gate_kinds()) {
        Gate probe{k, {}, {}, 0};
        if (touches_boson(probe) || k == GateKind::UDiss || k == GateKind::Pair) continue;
        const auto &info = gate_info(k);
        uint32_t nq = 0;
        for (RegisterKind r : info.signature) nq += r == RegisterKind::Qubit;
        oracle::Space sp{std::max(1u, nq), 3, {}};
        std::vector<MQS> ops;
        for (uint32_t f = 0; f < sp.nf; f++) {
            ops.push_back(MQS::gamma(f));
            ops.push_back(MQS::gamma_tilde(f));
        }
        for (uint32_t q = 0; q < sp.nq; q++)
            for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) ops.push_back(MQS::pauli(q, l));
        kinds++;
        // All placements of the signature on the register.
        std::vector<uint32_t> cur;
        std::function<void(size_t, const Angle &)> rec = [&](size_t pos, const Angle &a) {
            if (pos == info.signature.size()) {
                Gate g{k, cur, a, 0};
                oracle::Mat u = oracle::gate(sp, g);
                for (const MQS &s : ops) {
                    double d = oracle::max_abs(oracle::of(sp, conjugate(g, s)) -
                                               u.adjoint() * oracle::of(sp, OperatorSum(s)) * u);
                    if (d > worst) {
                        worst = d;
                        worst_gate = g.str();
                    }
                    checked++;
                }
                return;
            }
            uint32_t n = info.signature[pos] == RegisterKind::Qubit ? sp.nq : sp.nf;
            for (uint32_t t = 0; t < n; t++) {
                bool clash = false;
                for (size_t p = 0; p < pos; p++) clash = clash || (info.signature[p] == info.signature[pos] && cur[p] == t);
                if (clash) continue;
                cur.push_back(t);
                rec(pos + 1, a);
                cur.pop_back();
            }
        };
        for (const Angle &a : info.has_angle ? angles : std::vector<Angle>{Angle()}) rec(0, a);
    }
    double secs = seconds_since(t0);
    report(1, worst <= 1e-10 && secs < 10,
           std::to_string(kinds) + " gate kinds, " + std::to_string(checked) + " conjugations, max deviation " +
               fmt("%.2e", worst) + (worst_gate.empty() ? "" : " (" + worst_gate + ")") + ", " + fmt("%.2f", secs) + " s");
}

// ---- 2: braid variants ----

void criterion_braids() {
    oracle::Space sp{0, 2, {}};
    auto g = [&](uint32_t f) { return oracle::gamma(sp, f); };
    auto gt = [&](uint32_t f) { return oracle::gamma_tilde(sp, f); };
    struct Case {
        BraidVariant v;
        const char *name;
        oracle::Mat target;
    };
    std::vector<Case> cases = {
        {BraidVariant::TildeTilde, "tilde-tilde", oracle::expm(-M_PI / 4 * gt(0) * gt(1))},
        {BraidVariant::PlainPlain, "plain-plain", oracle::expm(-M_PI / 4 * g(0) * g(1))},
        {BraidVariant::Inverse, "inverse", oracle::expm(M_PI / 4 * gt(0) * g(1))},
    };
    double worst = 0;
    std::string detail;
    for (const auto &c : cases) {
        double d = oracle::phase_distance(oracle::circuit(sp, braid_variant(c.v, 0, 1)), c.target);
        worst = std::max(worst, d);
        detail += std::string(c.name) + " " + fmt("%.1e", d) + ", ";
    }
    report(2, worst <= 1e-10, detail + "max " + fmt("%.2e", worst));
}

// ---- 3 and 5 come from the library verify suite; pick out the relevant groups ----

const Check *find(const VerifyReport &r, const std::string &group, const std::string &name) {
    for (const auto &c : r.checks)
        if (c.group == group && c.name == name) return &c;
    return nullptr;
}

void criterion_detection(const VerifyReport &r) {
    const Check *n1 = find(r, "knill-laflamme", "two-site detects n1");
    const Check *p1 = find(r, "knill-laflamme", "two-site misses p1");
    const Check *syn = find(r, "decoder", "steane single-Majorana syndromes");
    const Check *cor = find(r, "decoder", "steane corrects every single Majorana");
    bool ok = n1 && p1 && syn && cor && n1->passed && p1->passed && syn->passed && cor->passed;
    std::string d = "n1 KL deviation " + fmt("%.1e", n1 ? n1->deviation : NAN) + "; p1 off-proportional part " +
                    fmt("%.3f", p1 ? p1->deviation : NAN) + " (undetectable); " +
                    fmt("%.0f", syn ? syn->deviation : NAN) + " distinct syndromes; worst 1 - fidelity after correction " +
                    fmt("%.1e", cor ? cor->deviation : NAN);
    report(3, ok, d);
}

void criterion_theorem() {
    TheoremDemo t = theorem_demo();
    report(4, t.passed(1e-10),
           std::to_string(t.pairs_checked) + " number-code candidate pairs, " + std::to_string(t.pairs_qualifying) +
               " anticommute across blocks; repetition code ||P{c_a^+, c_b^+}P|| = " +
               fmt("%.1e", t.repetition_anticommutator) + ", normalisation error " +
               fmt("%.1e", t.repetition_normalisation));
}

void criterion_logical(const VerifyReport &r) {
    size_t trips = 0;
    double worst = 0;
    bool ok = true;
    for (const std::string code : {"repetition-2", "repetition-3", "color-7"}) {
        for (const std::string g : {"BRAID", "CZf", "CZqf", "Sf", "Tf"}) {
            const Check *c = find(r, "logical", code + " " + g + " round trip");
            ok = ok && c && c->passed && c->deviation <= 1e-10;
            if (c) {
                worst = std::max(worst, c->deviation);
                trips++;
            }
        }
    }
    std::string phases;
    for (int d : {3, 5}) {
        const Check *c = find(r, "logical", "transversal CZf phase d=" + std::to_string(d));
        ok = ok && c && c->passed && c->detail == "-i";
        phases += " d=" + std::to_string(d) + ":" + (c ? c->detail : "missing");
    }
    report(5, ok && trips == 15,
           std::to_string(trips) + " round trips, max deviation " + fmt("%.1e", worst) + "; transversal CZf phase" + phases);
}

// ---- 6: FFFT ----

oracle::Mat single_particle(const Circuit &c) {
    const uint32_t n = c.registers.fermions;
    Layout layout(c.registers.qubits, n, c.registers.boson_cutoffs);
    auto mode = [&](uint32_t j) {
        Occupation o{{}, std::vector<int>(n, 0), {}};
        o.fermions[j] = 1;
        return StateVector::basis_state(layout, o);
    };
    oracle::Mat m(n, n);
    for (uint32_t j = 0; j < n; j++) {
        StateVector out = apply_circuit(mode(j), c);
        for (uint32_t i = 0; i < n; i++) m(i, j) = mode(i).inner(out);
    }
    return m;
}

void criterion_ffft() {
    auto t0 = std::chrono::steady_clock::now();
    double dft_dev = 0;
    for (uint32_t n : {2u, 4u, 8u}) {
        oracle::Mat f(n, n);
        for (uint32_t k = 0; k < n; k++)
            for (uint32_t j = 0; j < n; j++) f(k, j) = std::polar(1.0 / std::sqrt(double(n)), -2 * M_PI * j * k / n);
        dft_dev = std::max(dft_dev, oracle::max_abs(single_particle(ffft(n)) - f));
    }
    std::vector<double> ratio;
    std::string ratios;
    for (uint32_t n : {2u, 4u, 8u, 16u}) {
        ratio.push_back(double(count_resources(ffft(n)).depth) / std::log2(n));
        ratios += fmt("%.3g", ratio.back()) + (n < 16 ? "/" : "");
    }
    bool depth_ok = std::all_of(ratio.begin(), ratio.end(), [&](double r) { return r == ratio.front(); });

    ResourceTable small = resource_table({2, 4, 8, 16});
    const ScalingFit &cl = small.fit("fermion_ffft", "cliffords", ScalingModel::NLogN);
    const ScalingFit &cl_best = small.best("fermion_ffft", "cliffords");
    ResourceTable sw = resource_table({4, 8, 16, 32});
    const ScalingFit &fsd = sw.fit("fswap_network", "depth", ScalingModel::Linear);
    double secs = seconds_since(t0);

    bool ok = dft_dev <= 1e-10 && depth_ok && cl.residual <= 1e-12 && fsd.residual <= 1e-12 && secs < 30;
    report(6, ok,
           "DFT deviation " + fmt("%.1e", dft_dev) + " (identity permutation); depth/log2N " + ratios +
               "; Clifford count c*N*log2N fit c=" + fmt("%.3f", cl.constant) + " residual " + fmt("%.3g", cl.residual) +
               " (best model " + scaling_model_name(cl_best.model) + ", count is N log2 N + 3N/2 - 2)" +
               "; fSWAP depth c*N fit over N=4..32 c=" + fmt("%.3f", fsd.constant) + " residual " +
               fmt("%.1e", fsd.residual) + "; " + fmt("%.2f", secs) + " s");
}

// ---- 7: two-mode butterfly cost ----

void criterion_butterfly() {
    // The T layer is the fixed Tf, Tf^+ pair; the twiddle phase is the one free-angle gate.
    ResourceOptions t_only, twiddle_only;
    t_only.clifford = [](const Gate &g) { return g.kind != GateKind::Tf && g.kind != GateKind::TfDag; };
    twiddle_only.clifford = [](const Gate &g) { return g.kind != GateKind::PhaseF; };
    bool ok = true;
    std::string d;
    for (auto [k, n] : {std::pair<int64_t, int64_t>{0, 2}, {1, 4}, {1, 8}, {3, 16}}) {
        Circuit c = two_mode_fourier(FourierPhase(k, n));
        ResourceReport r = count_resources(c);
        size_t t_depth = count_resources(c, t_only).rotation_depth;
        size_t tw_depth = count_resources(c, twiddle_only).rotation_depth;
        ok = ok && r.gates == 5 && r.braids == 2 && r.single_fermion == 3 && t_depth == 1 && tw_depth <= 1;
        d += "k/n=" + std::to_string(k) + "/" + std::to_string(n) + ": " + std::to_string(r.braids) + " braids, " +
             std::to_string(r.single_fermion) + " single-fermion, T depth " + std::to_string(t_depth) +
             ", twiddle depth " + std::to_string(tw_depth) + ", all non-Clifford layers " +
             std::to_string(r.rotation_depth) + "; ";
    }
    d.resize(d.size() - 2);
    report(7, ok, d);
}

// ---- 8: pairing ----

void criterion_pairing() {
    auto t0 = std::chrono::steady_clock::now();
    ChoiConvergence conv = choi_converged(100, MoleculeSource::Fock, 100, 6400);
    const ChoiResult &choi = conv.result();
    bool choi_ok = conv.converged && choi.average_infidelity <= 2e-3;

    const std::vector<double> ns = {10, 20, 50, 100, 200};
    std::vector<double> miss_same, miss_cross;
    double worst_gap = 0, worst_ratio = 0;
    for (double n : ns) {
        FringeData s = ramsey({n, MoleculeSource::Fock}, theta_grid(), Wiring::Same);
        FringeData c = ramsey({n, MoleculeSource::Fock}, theta_grid(), Wiring::Cross);
        miss_same.push_back(1 - s.fit.contrast);
        miss_cross.push_back(1 - c.fit.contrast);
        double gap = std::abs(s.fit.contrast - c.fit.contrast);
        double res = std::max(s.fit.residual, c.fit.residual);
        worst_gap = std::max(worst_gap, gap);
        worst_ratio = std::max(worst_ratio, gap / std::max(res, 1e-300));
    }
    PowerLaw ps = fit_power_law(ns, miss_same), pc = fit_power_law(ns, miss_cross);
    bool slope_ok = std::abs(ps.exponent + 1) <= 0.15 && std::abs(pc.exponent + 1) <= 0.15;
    bool agree = worst_ratio <= 2;
    FringeData zero = ramsey({0, MoleculeSource::Fock}, theta_grid(), Wiring::Same);
    bool zero_ok = std::abs(zero.fit.contrast) < 1e-6;
    double secs = seconds_since(t0);

    std::string d = "Choi N2=100 converged at N1=" + std::to_string(choi.n1) + ": average infidelity " +
                    fmt("%.3e", choi.average_infidelity) + (choi_ok ? " ok" : " NOT ok") + "; 1-C slope same " +
                    fmt("%.3f", ps.exponent) + ", cross " + fmt("%.3f", pc.exponent) + (slope_ok ? " ok" : " NOT ok") +
                    "; |C_same - C_cross| up to " + fmt("%.2e", worst_gap) + " = " + fmt("%.2e", worst_ratio) +
                    " x fit residual" + (agree ? " ok" : " NOT ok") + "; N=0 contrast " +
                    fmt("%.1e", zero.fit.contrast) + (zero_ok ? " ok" : " NOT ok") + "; " + fmt("%.1f", secs) + " s";
    report(8, choi_ok && slope_ok && agree && zero_ok && secs < 300, d);
}

// ---- 9: byte-identical CLI output ----

std::string snapshot(const fs::path &dir) {
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(dir)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::string all;
    for (const auto &p : files) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        all += p.filename().string() + "\n" + ss.str();
    }
    return all;
}

void criterion_determinism() {
    const std::vector<std::string> invocations = {
        "--seed 11 verify",
        "--seed 11 codes --family color --d 3 --noise 0.05 --loss 0.01 --shots 2000 --rounds 2",
        "--seed 11 --format csv codes --family repetition --n 5 --noise 0.1 --shots 2000",
        "--seed 11 fft --method all",
        "--seed 11 --format csv pairing --experiment ramsey --n 10,50 --source poisson",
        "--seed 11 pairing --experiment bell --n1 400 --n2 10,20",
        "--seed 11 pairing --experiment choi --n1 400 --n2 10",
    };
    fs::path root = fs::temp_directory_path() / "fqc_acceptance";
    size_t same = 0;
    std::string bad;
    for (size_t k = 0; k < invocations.size(); k++) {
        std::string runs[2];
        for (int rep = 0; rep < 2; rep++) {
            fs::path dir = root / (std::to_string(k) + "_" + std::to_string(rep));
            fs::remove_all(dir);
            fs::create_directories(dir);
            std::string cmd = std::string(FQC_BINARY) + " --out " + dir.string() + " " + invocations[k] + " > /dev/null";
            int rc = std::system(cmd.c_str());
            runs[rep] = rc == 0 ? snapshot(dir) : "exit " + std::to_string(rc);
        }
        if (runs[0] == runs[1] && runs[0].rfind("exit", 0) != 0) {
            same++;
        } else {
            bad += " [" + invocations[k] + "]";
        }
    }
    fs::remove_all(root);
    report(9, same == invocations.size(),
           std::to_string(same) + "/" + std::to_string(invocations.size()) + " invocations byte-identical on repeat" + bad);
}

}  // namespace

int main() {
    criterion_table();
    criterion_braids();
    VerifyReport verify = run_verify({});
    criterion_detection(verify);
    criterion_theorem();
    criterion_logical(verify);
    criterion_ffft();
    criterion_butterfly();
    criterion_pairing();
    criterion_determinism();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
